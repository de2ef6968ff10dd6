#include "bivsd/empirical.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bivsd {

namespace {

void check_unit_query(double s, double t) {
  if (!(s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("query outside [0,1]x[0,1]");
}

std::size_t count_le_sorted(std::span<const double> sorted, double v) {
  return static_cast<std::size_t>(
      std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Index of v in a grid axis; every sample coordinate is a grid member by
// construction, anything else is a caller error.
std::size_t grid_index(const std::vector<double>& axis, double v) {
  const auto it = std::lower_bound(axis.begin(), axis.end(), v);
  if (it == axis.end() || *it != v)
    throw std::invalid_argument("grid does not contain sample coordinate");
  return static_cast<std::size_t>(it - axis.begin());
}

// Cumulative point counts over the grid: at(i,j) = #{p : p.x <= xs[i] and
// p.y <= ys[j]}. Histogram placement plus two prefix passes; integer
// arithmetic keeps every cdf value an exact rational count.
class QuadrantCounts {
 public:
  QuadrantCounts(const BivariateSample& s, const CombinedGrid& grid)
      : gx_(grid.xs.size()), gy_(grid.ys.size()), c_(gx_ * gy_, 0) {
    for (const Point& p : s.points)
      c_[grid_index(grid.xs, p.x) * gy_ + grid_index(grid.ys, p.y)] += 1;
    for (std::size_t i = 0; i < gx_; ++i) {
      std::uint32_t* row = &c_[i * gy_];
      for (std::size_t j = 1; j < gy_; ++j) row[j] += row[j - 1];
    }
    for (std::size_t i = 1; i < gx_; ++i) {
      const std::uint32_t* prev = &c_[(i - 1) * gy_];
      std::uint32_t* row = &c_[i * gy_];
      for (std::size_t j = 0; j < gy_; ++j) row[j] += prev[j];
    }
  }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return c_[i * gy_ + j];
  }
  std::uint32_t margin_x(std::size_t i) const { return at(i, gy_ - 1); }
  std::uint32_t margin_y(std::size_t j) const { return at(gx_ - 1, j); }

 private:
  std::size_t gx_;
  std::size_t gy_;
  std::vector<std::uint32_t> c_;
};

// count -> count/n lookup; same correctly-rounded double as the division,
// without a hardware divide in the scan loop.
std::vector<double> ratio_table(std::size_t n) {
  std::vector<double> t(n + 1);
  for (std::size_t c = 0; c <= n; ++c)
    t[c] = static_cast<double>(c) / static_cast<double>(n);
  return t;
}

}  // namespace

EmpiricalCdf::EmpiricalCdf(BivariateSample sample)
    : sample_(std::move(sample)) {
  if (sample_.points.empty())
    throw std::invalid_argument("empirical cdf needs a nonempty sample");
  sorted_x_.reserve(sample_.points.size());
  sorted_y_.reserve(sample_.points.size());
  for (const Point& p : sample_.points) {
    sorted_x_.push_back(p.x);
    sorted_y_.push_back(p.y);
  }
  std::sort(sorted_x_.begin(), sorted_x_.end());
  std::sort(sorted_y_.begin(), sorted_y_.end());
}

std::size_t EmpiricalCdf::count_le(double s, double t) const {
  std::size_t c = 0;
  for (const Point& p : sample_.points) c += (p.x <= s && p.y <= t) ? 1 : 0;
  return c;
}

std::size_t EmpiricalCdf::count_union(double s, double t) const {
  std::size_t c = 0;
  for (const Point& p : sample_.points) c += (p.x <= s || p.y <= t) ? 1 : 0;
  return c;
}

double EmpiricalCdf::cdf_at(double s, double t) const {
  check_unit_query(s, t);
  return static_cast<double>(count_le(s, t)) / static_cast<double>(size());
}

double EmpiricalCdf::marginal_cdf_at(Axis axis, double v) const {
  check_unit_query(v, 0.0);
  const auto& sorted = axis == Axis::x ? sorted_x_ : sorted_y_;
  return static_cast<double>(count_le_sorted(sorted, v)) /
         static_cast<double>(size());
}

double EmpiricalCdf::k_at(double s, double t) const {
  check_unit_query(s, t);
  // Single integer before the division: cx + cy - cxy is exactly the union
  // count, and summing rounded quotients instead would drift by an ulp.
  const std::size_t cx = count_le_sorted(sorted_x_, s);
  const std::size_t cy = count_le_sorted(sorted_y_, t);
  const std::size_t cxy = count_le(s, t);
  return static_cast<double>(cx + cy - cxy) / static_cast<double>(size());
}

CombinedGrid combined_grid(const BivariateSample& a,
                           const BivariateSample& b) {
  CombinedGrid g;
  g.xs.reserve(a.size() + b.size() + 2);
  g.ys.reserve(a.size() + b.size() + 2);
  g.xs.push_back(0.0);
  g.xs.push_back(1.0);
  g.ys.push_back(0.0);
  g.ys.push_back(1.0);
  for (const BivariateSample* s : {&a, &b}) {
    for (const Point& p : s->points) {
      g.xs.push_back(p.x);
      g.ys.push_back(p.y);
    }
  }
  std::sort(g.xs.begin(), g.xs.end());
  g.xs.erase(std::unique(g.xs.begin(), g.xs.end()), g.xs.end());
  std::sort(g.ys.begin(), g.ys.end());
  g.ys.erase(std::unique(g.ys.begin(), g.ys.end()), g.ys.end());
  return g;
}

SupremumResult sup_delta_surface(SurfaceKind kind, const EmpiricalCdf& a,
                                 const EmpiricalCdf& b,
                                 const CombinedGrid& grid) {
  const QuadrantCounts ca(a.sample(), grid);
  const QuadrantCounts cb(b.sample(), grid);
  const std::vector<double> ra = ratio_table(a.size());
  const std::vector<double> rb = ratio_table(b.size());
  const std::size_t gx = grid.xs.size();
  const std::size_t gy = grid.ys.size();

  double best = -std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < gx; ++i) {
    for (std::size_t j = 0; j < gy; ++j) {
      double v;
      if (kind == SurfaceKind::delta_cdf) {
        v = ra[ca.at(i, j)] - rb[cb.at(i, j)];
      } else {
        const std::uint32_t ua = ca.margin_x(i) + ca.margin_y(j) - ca.at(i, j);
        const std::uint32_t ub = cb.margin_x(i) + cb.margin_y(j) - cb.at(i, j);
        v = ra[ua] - rb[ub];
      }
      // strict > keeps the lexicographically smallest argmax
      if (v > best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }
  return {best, grid.xs[bi], grid.ys[bj]};
}

SupremumResult1D sup_delta_marginal_cdf(Axis axis, const EmpiricalCdf& a,
                                        const EmpiricalCdf& b,
                                        const CombinedGrid& grid) {
  const auto& axis_values = axis == Axis::x ? grid.xs : grid.ys;
  const auto sa = axis == Axis::x ? a.sorted_x() : a.sorted_y();
  const auto sb = axis == Axis::x ? b.sorted_x() : b.sorted_y();
  const double m = static_cast<double>(a.size());
  const double n = static_cast<double>(b.size());

  double best = -std::numeric_limits<double>::infinity();
  double arg = 0.0;
  for (const double v : axis_values) {
    const double value =
        static_cast<double>(count_le_sorted(sa, v)) / m -
        static_cast<double>(count_le_sorted(sb, v)) / n;
    if (value > best) {
      best = value;
      arg = v;
    }
  }
  return {best, arg};
}

}  // namespace bivsd
