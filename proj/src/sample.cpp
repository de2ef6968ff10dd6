#include "bivsd/sample.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>

namespace bivsd {

namespace {

[[noreturn]] void row_error(const std::filesystem::path& path,
                            std::size_t row, const std::string& what) {
  throw std::runtime_error(path.string() + ": row " + std::to_string(row) +
                           ": " + what);
}

double parse_field(std::string_view field, const std::filesystem::path& path,
                   std::size_t row) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
    field.remove_prefix(1);
  while (!field.empty() &&
         (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
    field.remove_suffix(1);
  if (field.empty()) row_error(path, row, "empty numeric field");

  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc{} || result.ptr != last)
    row_error(path, row,
              "cannot parse numeric field '" + std::string(field) + "'");
  if (!std::isfinite(value)) row_error(path, row, "non-finite value");
  return value;
}

void check_raw(const RawSample& s) {
  if (s.points.size() < 2)
    throw std::invalid_argument("sample '" + s.label +
                                "' needs at least 2 points");
  for (const Point& p : s.points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("sample '" + s.label +
                                  "' contains a non-finite coordinate");
}

std::vector<Point> apply_transform(const std::vector<Point>& points,
                                   const RescaleTransform& t) {
  std::vector<Point> out;
  out.reserve(points.size());
  const double x_range = t.x_max - t.x_min;
  const double y_range = t.y_max - t.y_min;
  for (const Point& p : points)
    out.push_back({(p.x - t.x_min) / x_range, (p.y - t.y_min) / y_range});
  return out;
}

}  // namespace

RawSample load_sample(const std::filesystem::path& path, TableFormat format,
                      bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  const char delim = format == TableFormat::csv ? ',' : '\t';
  RawSample out;
  out.label = path.stem().string();

  std::string line;
  std::size_t row = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++row;
    std::string_view sv(line);
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    if (sv.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    const std::size_t cut = sv.find(delim);
    if (cut == std::string_view::npos)
      row_error(path, row, "expected two delimited columns");
    const std::string_view rest = sv.substr(cut + 1);
    if (rest.find(delim) != std::string_view::npos)
      row_error(path, row, "more than two columns");
    const double x = parse_field(sv.substr(0, cut), path, row);
    const double y = parse_field(rest, path, row);
    out.points.push_back({x, y});
  }

  if (out.points.size() < 2)
    throw std::runtime_error(path.string() + ": sample too small: need at least 2 rows, got " +
                             std::to_string(out.points.size()));
  return out;
}

std::tuple<BivariateSample, BivariateSample, RescaleTransform> rescale_pooled(
    const RawSample& a, const RawSample& b) {
  check_raw(a);
  check_raw(b);

  RescaleTransform t;
  t.identity = false;
  t.x_min = t.y_min = std::numeric_limits<double>::infinity();
  t.x_max = t.y_max = -std::numeric_limits<double>::infinity();
  for (const RawSample* s : {&a, &b}) {
    for (const Point& p : s->points) {
      t.x_min = std::min(t.x_min, p.x);
      t.x_max = std::max(t.x_max, p.x);
      t.y_min = std::min(t.y_min, p.y);
      t.y_max = std::max(t.y_max, p.y);
    }
  }
  if (!(t.x_min < t.x_max))
    throw std::invalid_argument("degenerate x axis: all pooled values equal");
  if (!(t.y_min < t.y_max))
    throw std::invalid_argument("degenerate y axis: all pooled values equal");

  // (v - min)/(max - min) stays inside [0,1] for v in [min, max] because
  // both the subtraction and the division are monotone; the pooled extremes
  // land exactly on 0 and 1.
  BivariateSample sa{apply_transform(a.points, t), t};
  BivariateSample sb{apply_transform(b.points, t), t};
  return {std::move(sa), std::move(sb), t};
}

std::tuple<BivariateSample, BivariateSample, RescaleTransform>
rescale_identity(const RawSample& a, const RawSample& b) {
  check_raw(a);
  check_raw(b);
  for (const RawSample* s : {&a, &b})
    for (const Point& p : s->points)
      if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0)
        throw std::invalid_argument(
            "identity rescale requested but sample '" + s->label +
            "' has a coordinate outside [0,1]");

  const RescaleTransform t;  // identity
  return {BivariateSample{a.points, t}, BivariateSample{b.points, t}, t};
}

BivariateSample make_unit_sample(std::vector<Point> points,
                                 RescaleTransform rescale) {
  if (points.empty())
    throw std::invalid_argument("bivariate sample must be nonempty");
  for (const Point& p : points)
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
      throw std::invalid_argument("coordinate outside [0,1]");
  return {std::move(points), rescale};
}

}  // namespace bivsd
