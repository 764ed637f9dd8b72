#pragma once

// JSON and CSV encodings of geodesic samples. Numbers are written in the
// shortest decimal form that round-trips to the same binary64 value (at most
// 17 significant digits), identically in both formats.

#include <string>
#include <vector>

#include "srgeo/exp_map.hpp"

namespace srgeo {

struct RunMeta {
  double a = 0.5;
  Region region = Region::C4;
  double k = 0.0;
  double theta0 = 0.0;
  int s1 = 1;
  int s2 = 1;
  int parity = 0;
};

RunMeta make_meta(const Geodesic& geo);

/// Shortest round-trip decimal for a finite double; throws DomainError otherwise.
std::string format_number(double x);

/// {"meta": {...}, "samples": [{"t", "R" (row-major), "q", "p", "phi3"}]}
std::string samples_to_json(const RunMeta& meta, const std::vector<GeodesicSample>& samples,
                            int indent = 2);

/// Header t,R11..R33,q0..q3,p1..p3,phi3 after '#'-prefixed meta lines.
std::string samples_to_csv(const RunMeta& meta, const std::vector<GeodesicSample>& samples);

}  // namespace srgeo
