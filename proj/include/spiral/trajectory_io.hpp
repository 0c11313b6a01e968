#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spiral/operators.hpp"

namespace spiral {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Inverse of format_double; throws std::invalid_argument on malformed input.
double parse_double(std::string_view s);

/// CSV layout: header "iter,coord_0,...,coord_{d-1},branch[,shadow_0,...]",
/// one row per recorded iterate, indices contiguous from 0. The shadow block
/// is present only when shadows is non-null (then shadows->size() must match
/// the number of points).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<Vec>* shadows = nullptr);

struct ParsedTrajectoryRow {
  long iter = 0;
  std::vector<double> coords;
  std::string branch;
  std::vector<double> shadow;
};

struct ParsedTrajectory {
  int dim = 0;
  bool has_shadow = false;
  std::vector<ParsedTrajectoryRow> rows;
};

ParsedTrajectory parse_trajectory_csv(std::istream& is);

}  // namespace spiral
