#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

namespace bivsd {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Per-axis affine map raw -> [0,1] applied to a pooled pair of samples.
// The pooled extremes are kept so second-order results stay interpretable
// on the original scale.
struct RescaleTransform {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  bool identity = true;
};

// Sample as read from disk, before any rescaling.
struct RawSample {
  std::vector<Point> points;
  std::string label;
};

// Sample mapped onto the unit square; every coordinate lies in [0,1].
struct BivariateSample {
  std::vector<Point> points;
  RescaleTransform rescale;

  std::size_t size() const { return points.size(); }
};

enum class TableFormat { csv, tsv };

// Reads a two-column numeric table. Throws std::runtime_error with the
// offending row number on parse failures, non-finite values, or fewer than
// two data rows.
RawSample load_sample(const std::filesystem::path& path, TableFormat format,
                      bool has_header);

// Maps both samples onto [0,1]^2 with a common per-axis affine transform
// built from the pooled min/max. Pooled extremes land exactly on 0 and 1.
// Throws std::invalid_argument if an axis is degenerate (all values equal).
std::tuple<BivariateSample, BivariateSample, RescaleTransform>
rescale_pooled(const RawSample& a, const RawSample& b);

// Passes both samples through unchanged. Throws std::invalid_argument if any
// coordinate falls outside [0,1].
std::tuple<BivariateSample, BivariateSample, RescaleTransform>
rescale_identity(const RawSample& a, const RawSample& b);

// Validating constructor for samples assembled in code (generators, tests).
BivariateSample make_unit_sample(std::vector<Point> points,
                                 RescaleTransform rescale = {});

}  // namespace bivsd
