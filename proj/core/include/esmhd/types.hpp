#ifndef ESMHD_TYPES_HPP_
#define ESMHD_TYPES_HPP_

#include <array>
#include <cmath>
#include <cstddef>

namespace esmhd {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm2() const { return x * x + y * y + z * z; }
  Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {s * x, s * y, s * z}; }
};

inline double dot(const Vec3 &a, const Vec3 &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// 8-vector of the conserved/flux/entropy-variable components.
using Vec8 = std::array<double, 8>;

// Dense 8x8 matrix, row-major.
struct Mat8 {
  std::array<double, 64> a{};

  double &operator()(int r, int c) { return a[static_cast<std::size_t>(8 * r + c)]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(8 * r + c)]; }
};

inline Vec8 operator+(const Vec8 &a, const Vec8 &b) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec8 operator-(const Vec8 &a, const Vec8 &b) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec8 operator*(double s, const Vec8 &a) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = s * a[i];
  return r;
}

inline double dot(const Vec8 &a, const Vec8 &b) {
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

inline Vec8 matvec(const Mat8 &m, const Vec8 &v) {
  Vec8 r{};
  for (int i = 0; i < 8; ++i) {
    double s = 0.0;
    for (int j = 0; j < 8; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

} // namespace esmhd

#endif // ESMHD_TYPES_HPP_
