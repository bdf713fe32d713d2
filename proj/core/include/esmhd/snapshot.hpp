#ifndef ESMHD_SNAPSHOT_HPP_
#define ESMHD_SNAPSHOT_HPP_

//! \file snapshot.hpp
//  \brief Field snapshot writers/readers (CSV and flat binary) and the
//  key=value config-file grammar shared with the CLI.

#include <map>
#include <string>

#include "esmhd/grid.hpp"
#include "esmhd/state.hpp"

namespace esmhd {

enum class SnapshotFormat { Csv, Bin };

struct SnapshotMeta {
  double time = 0.0;
  int nx = 1, ny = 1, nz = 1;
  double gamma = 5.0 / 3.0;
};

// CSV layout: three comment lines
//   # time=<t>
//   # nx=<nx> ny=<ny> nz=<nz>
//   # gamma=<g>
// then one row per fluid cell, x-fastest:
//   x,y,z,rho,u,v,w,p,E,B1,B2,B3
// written with 17 significant digits.
void write_snapshot(const Field &f, const Grid &g, const GasModel &gas,
                    double time, const std::string &path,
                    SnapshotFormat format = SnapshotFormat::Csv);

struct SnapshotData {
  SnapshotMeta meta;
  // one row per cell in file order: x,y,z,rho,u,v,w,p,E,B1,B2,B3
  std::vector<std::array<double, 12>> rows;
};

SnapshotData read_snapshot_csv(const std::string &path);

// Re-emits parsed snapshot data with the writer's exact formatting; reading
// and rewriting a snapshot reproduces it byte for byte.
void write_snapshot_csv(const SnapshotData &data, const std::string &path);

// Plain `key = value` per line, '#' starts a comment, later keys win.
std::map<std::string, std::string> parse_config(const std::string &text);
std::map<std::string, std::string> parse_config_file(const std::string &path);
void write_config_file(const std::map<std::string, std::string> &kv,
                       const std::string &path);

} // namespace esmhd

#endif // ESMHD_SNAPSHOT_HPP_
