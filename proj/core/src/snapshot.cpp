#include "esmhd/snapshot.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace esmhd {

void write_snapshot(const Field &f, const Grid &g, const GasModel &gas,
                    double time, const std::string &path, SnapshotFormat format) {
  std::FILE *fp = std::fopen(path.c_str(), format == SnapshotFormat::Bin ? "wb" : "w");
  if (!fp) throw std::runtime_error("cannot open " + path);

  if (format == SnapshotFormat::Bin) {
    // flat little-endian dump: int32 nx,ny,nz; float64 time,gamma; then
    // nx*ny*nz records of 9 float64 (rho,u,v,w,p,E,B1,B2,B3), x-fastest,
    // solid cells included.
    const std::int32_t dims[3] = {g.nx, g.ny, g.nz};
    std::fwrite(dims, sizeof(dims), 1, fp);
    const double meta[2] = {time, gas.gamma};
    std::fwrite(meta, sizeof(meta), 1, fp);
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const Prim w = cons_to_prim(f.get(i, j, k), gas);
          const double rec[9] = {w.rho, w.vel.x, w.vel.y, w.vel.z, w.p,
                                 f.cell(i, j, k)[4], w.B.x, w.B.y, w.B.z};
          std::fwrite(rec, sizeof(rec), 1, fp);
        }
    std::fclose(fp);
    return;
  }

  std::fprintf(fp, "# time=%.17g\n", time);
  std::fprintf(fp, "# nx=%d ny=%d nz=%d\n", g.nx, g.ny, g.nz);
  std::fprintf(fp, "# gamma=%.17g\n", gas.gamma);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.is_solid(i, j, k)) continue;
        const Prim w = cons_to_prim(f.get(i, j, k), gas);
        std::fprintf(fp,
                     "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                     "%.17g,%.17g,%.17g\n",
                     g.xc(i), g.yc(j), g.zc(k), w.rho, w.vel.x, w.vel.y, w.vel.z,
                     w.p, f.cell(i, j, k)[4], w.B.x, w.B.y, w.B.z);
      }
  std::fclose(fp);
}

SnapshotData read_snapshot_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  SnapshotData data;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (std::sscanf(line.c_str(), "# time=%lf", &data.meta.time) == 1) continue;
      if (std::sscanf(line.c_str(), "# nx=%d ny=%d nz=%d", &data.meta.nx,
                      &data.meta.ny, &data.meta.nz) == 3)
        continue;
      if (std::sscanf(line.c_str(), "# gamma=%lf", &data.meta.gamma) == 1) continue;
      continue;
    }
    std::array<double, 12> row{};
    std::stringstream ss(line);
    std::string tok;
    int c = 0;
    while (c < 12 && std::getline(ss, tok, ',')) row[c++] = std::stod(tok);
    if (c != 12) throw std::runtime_error("malformed snapshot row: " + line);
    data.rows.push_back(row);
  }
  return data;
}

void write_snapshot_csv(const SnapshotData &data, const std::string &path) {
  std::FILE *fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("cannot open " + path);
  std::fprintf(fp, "# time=%.17g\n", data.meta.time);
  std::fprintf(fp, "# nx=%d ny=%d nz=%d\n", data.meta.nx, data.meta.ny,
               data.meta.nz);
  std::fprintf(fp, "# gamma=%.17g\n", data.meta.gamma);
  for (const auto &r : data.rows) {
    std::fprintf(fp,
                 "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                 "%.17g,%.17g,%.17g\n",
                 r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8], r[9],
                 r[10], r[11]);
  }
  std::fclose(fp);
}

std::map<std::string, std::string> parse_config(const std::string &text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw std::runtime_error("config line with empty key");
    kv[key] = val;
  }
  return kv;
}

std::map<std::string, std::string> parse_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void write_config_file(const std::map<std::string, std::string> &kv,
                       const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const auto &[k, v] : kv) out << k << " = " << v << "\n";
}

} // namespace esmhd
