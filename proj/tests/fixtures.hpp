#pragma once

#include <string>

#include "latql/io.hpp"
#include "latql/lattice.hpp"

namespace fixtures {

inline std::string data_path(const std::string& file) { return std::string(LATQL_DATA_DIR) + "/" + file; }

inline latql::FormalContext load(const std::string& file) {
  return latql::read_burmeister(latql::read_file(data_path(file)), file);
}

// g1: m3 m4, g2: m2 m4, g3: m1 m3.
inline latql::FormalContext kf6() { return load("kf6.cxt"); }

// Objects 1..6, attributes a..f.
inline latql::FormalContext fig4() { return load("fig4.cxt"); }

// 13 airlines by 9 destination regions.
inline latql::FormalContext star_alliance() { return load("star_alliance.cxt"); }

}  // namespace fixtures
