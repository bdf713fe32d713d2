#include <doctest.h>

#include <cmath>

#include "esmhd/means.hpp"
#include "oracles.hpp"

using namespace esmhd;
using esmhd::testing::rel_err;
using esmhd::testing::StateGen;

TEST_CASE("log_mean: fixed values") {
  CHECK(log_mean(1.0, 1.0) == 1.0);
  CHECK(log_mean(1.0, 2.0) ==
        doctest::Approx(1.4426950408889634).epsilon(1e-15));
  const double lm = log_mean(1.0, 1.0 + 1e-13);
  CHECK(std::isfinite(lm));
  CHECK(lm >= 1.0);
  CHECK(lm <= 1.0 + 1e-13);
}

TEST_CASE("log_mean matches the 50-digit reference table to 1e-13") {
  for (const auto &c : esmhd::testing::log_mean_table()) {
    CHECK(rel_err(log_mean(c.a, c.b), c.expected) <= 1e-13);
    CHECK(rel_err(log_mean(c.b, c.a), c.expected) <= 1e-13); // symmetry
  }
}

TEST_CASE("log_mean: series and direct branches agree at the switch") {
  // the switch sits at u = f^2 = 1e-4, i.e. a/b ~ 1.0202; both branches must
  // produce the same value there so the selected one is jump-free
  for (double base : {1.0, 0.037, 512.0}) {
    for (double t = 0.0200; t <= 0.0205; t += 2.0e-5) {
      const double a = base * (1.0 + t), b = base;
      const double zeta = a / b;
      const double f = (zeta - 1.0) / (zeta + 1.0);
      const double u = f * f;
      const double series =
          0.5 * (a + b) / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u / 7.0)));
      const double direct = (a - b) / std::log(zeta);
      CHECK(std::fabs(series - direct) <= 1e-13 * direct);
      const double lm = log_mean(a, b);
      CHECK((lm == series || lm == direct));
    }
  }
}

TEST_CASE("log_mean stays between its arguments") {
  StateGen gen(0x42);
  for (int n = 0; n < 2000; ++n) {
    const double a = std::pow(10.0, gen.uni(-6, 6));
    const double b = std::pow(10.0, gen.uni(-6, 6));
    const double lm = log_mean(a, b);
    CHECK(lm >= std::min(a, b) * (1 - 1e-14));
    CHECK(lm <= std::max(a, b) * (1 + 1e-14));
  }
}

TEST_CASE("jump identities") {
  // [[ab]] = <a>[[b]] + <b>[[a]] with a=(1,3), b=(2,4): 10 = 2*2 + 3*2
  const JumpResiduals r = jump_properties_check(1.0, 3.0, 2.0, 4.0);
  CHECK(r.product == 0.0);
  CHECK(r.square == 0.0);

  const JumpResiduals eq = jump_properties_check(5.0, 5.0, -2.0, -2.0);
  CHECK(eq.product == 0.0);
  CHECK(eq.square == 0.0);

  StateGen gen(0x137);
  for (int n = 0; n < 1000; ++n) {
    const double aL = gen.uni(-10, 10), aR = gen.uni(-10, 10);
    const double bL = gen.uni(-10, 10), bR = gen.uni(-10, 10);
    const JumpResiduals res = jump_properties_check(aL, aR, bL, bR);
    const double scale =
        std::fabs(aL * bL) + std::fabs(aR * bR) + std::fabs(aL * aR) + 1.0;
    CHECK(std::fabs(res.product) <= 1e-14 * scale);
    CHECK(std::fabs(res.square) <= 1e-14 * scale);
  }
}

TEST_CASE("interface_means: coincident states collapse to pointwise values") {
  const GasModel g{5.0 / 3.0};
  const Prim w{0.8, {0.4, -0.2, 1.1}, 2.5, {0.3, -0.6, 0.9}};
  const InterfaceMeans m = interface_means(w, w, g);
  CHECK(m.j_rho == 0.0);
  CHECK(m.j_u == 0.0);
  CHECK(m.j_beta == 0.0);
  CHECK(m.j_B2 == 0.0);
  for (int c = 0; c < 8; ++c) CHECK(m.j_entropy_vars[c] == 0.0);
  CHECK(m.rho == w.rho);
  CHECK(m.rho_ln == doctest::Approx(w.rho).epsilon(1e-15));
  CHECK(m.p_ln == doctest::Approx(w.p).epsilon(1e-14));
  CHECK(m.p_tilde == doctest::Approx(w.p).epsilon(1e-14));
  // 2<u>^2 - <u^2> collapses exactly at equal states
  CHECK(m.u2bar == doctest::Approx(w.vel.norm2()).epsilon(1e-15));
  CHECK(m.E_bar ==
        doctest::Approx(w.p / (g.gamma - 1) + 0.5 * w.rho * w.vel.norm2())
            .epsilon(1e-14));
}

TEST_CASE("interface_means: Brio-Wu pair") {
  const GasModel g{2.0};
  const Prim wL{1.0, {0, 0, 0}, 1.0, {0.75, 1.0, 0.0}};
  const Prim wR{0.125, {0, 0, 0}, 0.1, {0.75, -1.0, 0.0}};
  const InterfaceMeans m = interface_means(wL, wR, g);
  CHECK(m.rho == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(m.j_rho == doctest::Approx(-0.875).epsilon(1e-15));
  CHECK(m.rho_ln == doctest::Approx(0.875 / std::log(8.0)).epsilon(1e-14));
  CHECK(m.rho_ln == doctest::Approx(0.42079).epsilon(1e-4));
}

TEST_CASE("interface_means: L/R symmetry of means, antisymmetry of jumps") {
  const GasModel g{1.4};
  StateGen gen(0xbeef);
  for (int n = 0; n < 200; ++n) {
    const Prim wL = gen.prim(), wR = gen.prim();
    const InterfaceMeans a = interface_means(wL, wR, g);
    const InterfaceMeans b = interface_means(wR, wL, g);
    CHECK(a.rho == b.rho);
    CHECK(a.rho_ln == doctest::Approx(b.rho_ln).epsilon(1e-15));
    CHECK(a.beta_ln == doctest::Approx(b.beta_ln).epsilon(1e-15));
    CHECK(a.uB2B2 == b.uB2B2);
    CHECK(a.j_rho == -b.j_rho);
    CHECK(a.j_B1 == -b.j_B1);
    for (int c = 0; c < 8; ++c)
      CHECK(a.j_entropy_vars[c] == doctest::Approx(-b.j_entropy_vars[c]));
  }
}
