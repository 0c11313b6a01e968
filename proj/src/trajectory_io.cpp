#include "spiral/trajectory_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace spiral {

std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: buffer overflow");
  return std::string(buf, end);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("parse_double: malformed number '" +
                                std::string(s) + "'");
  return v;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<Vec>* shadows) {
  if (traj.points.empty())
    throw std::invalid_argument("write_trajectory_csv: empty trajectory");
  if (shadows && shadows->size() != traj.points.size())
    throw std::invalid_argument("write_trajectory_csv: shadow count mismatch");

  const auto d = traj.points.front().size();
  os << "iter";
  for (Eigen::Index j = 0; j < d; ++j) os << ",coord_" << j;
  os << ",branch";
  if (shadows)
    for (Eigen::Index j = 0; j < d; ++j) os << ",shadow_" << j;
  os << "\n";

  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    os << i;
    for (Eigen::Index j = 0; j < d; ++j)
      os << ',' << format_double(traj.points[i][j]);
    os << ',' << to_string(traj.branches[i]);
    if (shadows)
      for (Eigen::Index j = 0; j < d; ++j)
        os << ',' << format_double((*shadows)[i][j]);
    os << "\n";
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

ParsedTrajectory parse_trajectory_csv(std::istream& is) {
  ParsedTrajectory out;
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("parse_trajectory_csv: missing header");

  const auto header = split_csv_line(line);
  int dim = 0, shadow_dim = 0;
  for (const auto& h : header) {
    if (h.rfind("coord_", 0) == 0) ++dim;
    if (h.rfind("shadow_", 0) == 0) ++shadow_dim;
  }
  if (header.empty() || header.front() != "iter" || dim == 0)
    throw std::invalid_argument("parse_trajectory_csv: bad header");
  out.dim = dim;
  out.has_shadow = shadow_dim > 0;

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw std::invalid_argument("parse_trajectory_csv: ragged row");
    ParsedTrajectoryRow row;
    row.iter = static_cast<long>(parse_double(fields[0]));
    for (int j = 0; j < dim; ++j) row.coords.push_back(parse_double(fields[1 + j]));
    row.branch = fields[1 + dim];
    for (int j = 0; j < shadow_dim; ++j)
      row.shadow.push_back(parse_double(fields[2 + dim + j]));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace spiral
