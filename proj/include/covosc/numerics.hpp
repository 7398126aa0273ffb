#pragma once

// Grid construction, deterministic trapezoid quadrature, finite differences,
// and the SampledField container. Reduction order is part of the contract:
// every sum is row partial sums (t fast) combined in ascending z order, so
// results are bitwise identical for any worker count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "covosc/errors.hpp"
#include "covosc/kinematics.hpp"

namespace covosc {

struct Grid1D {
  double min = -1.0;
  double max = 1.0;
  int count = 3;  // odd and >= 3 so a symmetric axis has the origin as a node

  double spacing() const { return (max - min) / static_cast<double>(count - 1); }

  // exact at both ends; for min = -max the nodes are bitwise antisymmetric
  double node(int i) const {
    const double c = static_cast<double>(count - 1);
    return (min * (c - static_cast<double>(i)) + max * static_cast<double>(i)) / c;
  }

  // trapezoid weight of node i
  double weight(int i) const {
    const double h = spacing();
    return (i == 0 || i == count - 1) ? 0.5 * h : h;
  }
};

inline void validate_grid(const Grid1D& g) {
  require_finite(g.min, "grid min");
  require_finite(g.max, "grid max");
  if (!(g.max > g.min)) throw invalid_parameter("grid requires max > min");
  if (g.count < 3 || g.count % 2 == 0) {
    throw invalid_parameter("grid count must be odd and >= 3, got " + std::to_string(g.count));
  }
}

struct Grid2D {
  Grid1D axis_z;
  Grid1D axis_t;
};

inline void validate_grid(const Grid2D& g) {
  validate_grid(g.axis_z);
  validate_grid(g.axis_t);
}

// real samples on a rectangular grid, row-major with z as the slow index
struct SampledField {
  Grid2D grid;
  std::vector<double> values;

  double value_at(int iz, int it) const {
    return values[static_cast<std::size_t>(iz) * grid.axis_t.count + it];
  }
  double& value_at(int iz, int it) {
    return values[static_cast<std::size_t>(iz) * grid.axis_t.count + it];
  }
};

inline void validate_field(const SampledField& f) {
  validate_grid(f.grid);
  const std::size_t expected = static_cast<std::size_t>(f.grid.axis_z.count) *
                               static_cast<std::size_t>(f.grid.axis_t.count);
  if (f.values.size() != expected) {
    throw invalid_parameter("field size " + std::to_string(f.values.size()) +
                            " does not match grid " + std::to_string(expected));
  }
}

// inclusive node range; empty() means the whole row is negligible
struct IndexWindow {
  int first = 0;
  int last = -1;
  bool empty() const { return last < first; }
};

// smallest symmetric odd grid covering ±range with spacing <= max_spacing
inline Grid1D symmetric_axis(double range, double max_spacing) {
  if (!std::isfinite(range) || range <= 0.0 || !std::isfinite(max_spacing) ||
      max_spacing <= 0.0) {
    throw invalid_parameter("symmetric_axis requires positive finite range and spacing");
  }
  const int half = static_cast<int>(std::ceil(range / max_spacing));
  return Grid1D{-range, range, 2 * half + 1};
}

// covers the squeezed support ±(6 + 2 sqrt n) e^|eta| at spacing 0.05 e^-|eta|
inline Grid2D default_grid(Rapidity eta, int n) {
  require_finite(eta.eta, "eta");
  if (std::abs(eta.eta) > ETA_MAX) {
    throw invalid_parameter("quadrature requires |eta| <= " + std::to_string(ETA_MAX));
  }
  if (n < 0 || n > N_MAX) {
    throw invalid_parameter("n must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  const double stretch = std::exp(std::abs(eta.eta));
  const Grid1D axis =
      symmetric_axis((6.0 + 2.0 * std::sqrt(static_cast<double>(n))) * stretch, 0.05 / stretch);
  return Grid2D{axis, axis};
}

namespace detail {

// run fn(i) for i in [0, rows); chunks go to separate threads, results land in
// per-row slots, so the caller's later ascending-order use is reproducible
template <class Fn>
void parallel_for(int rows, int threads, Fn&& fn) {
  if (threads <= 1 || rows < 2 * threads) {
    for (int i = 0; i < rows; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const int chunk = (rows + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const int begin = w * chunk;
    const int end = std::min(rows, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (int i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// sum of row_value(i) in ascending i, rows evaluated possibly in parallel
template <class RowFn>
double ordered_row_sum(int rows, int threads, RowFn&& row_value) {
  if (threads <= 1 || rows < 2 * threads) {
    double total = 0.0;
    for (int i = 0; i < rows; ++i) total += row_value(i);
    return total;
  }
  std::vector<double> slot(static_cast<std::size_t>(rows));
  parallel_for(rows, threads, [&](int i) { slot[static_cast<std::size_t>(i)] = row_value(i); });
  double total = 0.0;
  for (int i = 0; i < rows; ++i) total += slot[static_cast<std::size_t>(i)];
  return total;
}

}  // namespace detail

// composite trapezoid over both axes of a stored field
inline double integrate_2d(const SampledField& field) {
  validate_field(field);
  const Grid1D& az = field.grid.axis_z;
  const Grid1D& at = field.grid.axis_t;
  return detail::ordered_row_sum(az.count, 1, [&](int i) {
    double row = 0.0;
    for (int j = 0; j < at.count; ++j) row += at.weight(j) * field.value_at(i, j);
    return az.weight(i) * row;
  });
}

// streaming variant: f(z, t) is evaluated on the fly, nothing is materialized
template <class F>
double integrate_2d(const Grid2D& grid, F&& f, int threads = 1) {
  validate_grid(grid);
  const Grid1D az = grid.axis_z;
  const Grid1D at = grid.axis_t;
  return detail::ordered_row_sum(az.count, threads, [&, az, at](int i) {
    const double z = az.node(i);
    double row = 0.0;
    for (int j = 0; j < at.count; ++j) row += at.weight(j) * f(z, at.node(j));
    return az.weight(i) * row;
  });
}

// streaming variant that skips nodes outside window(i); callers guarantee the
// integrand is negligible (below every stated tolerance) outside the window
template <class F, class W>
double integrate_2d_windowed(const Grid2D& grid, F&& f, W&& window, int threads = 1) {
  validate_grid(grid);
  const Grid1D az = grid.axis_z;
  const Grid1D at = grid.axis_t;
  return detail::ordered_row_sum(az.count, threads, [&, az, at](int i) {
    const IndexWindow win = window(i);
    if (win.empty()) return 0.0;
    const double z = az.node(i);
    double row = 0.0;
    for (int j = win.first; j <= win.last; ++j) row += at.weight(j) * f(z, at.node(j));
    return az.weight(i) * row;
  });
}

template <class F>
SampledField sample_field(const Grid2D& grid, F&& f, int threads = 1) {
  validate_grid(grid);
  SampledField field{grid, std::vector<double>(static_cast<std::size_t>(grid.axis_z.count) *
                                               static_cast<std::size_t>(grid.axis_t.count))};
  const Grid1D az = grid.axis_z;
  const Grid1D at = grid.axis_t;
  double* values = field.values.data();
  detail::parallel_for(az.count, threads, [&, az, at, values](int i) {
    const double z = az.node(i);
    double* row = values + static_cast<std::size_t>(i) * at.count;
    for (int j = 0; j < at.count; ++j) row[j] = f(z, at.node(j));
  });
  return field;
}

// zero outside window(i)
template <class F, class W>
SampledField sample_field_windowed(const Grid2D& grid, F&& f, W&& window, int threads = 1) {
  validate_grid(grid);
  SampledField field{grid, std::vector<double>(static_cast<std::size_t>(grid.axis_z.count) *
                                               static_cast<std::size_t>(grid.axis_t.count))};
  const Grid1D az = grid.axis_z;
  const Grid1D at = grid.axis_t;
  double* values = field.values.data();
  detail::parallel_for(az.count, threads, [&, az, at, values](int i) {
    const IndexWindow win = window(i);
    if (win.empty()) return;
    const double z = az.node(i);
    double* row = values + static_cast<std::size_t>(i) * at.count;
    for (int j = win.first; j <= win.last; ++j) row[j] = f(z, at.node(j));
  });
  return field;
}

inline double integrate_1d(const Grid1D& axis, const std::vector<double>& values) {
  validate_grid(axis);
  if (values.size() != static_cast<std::size_t>(axis.count)) {
    throw invalid_parameter("profile size does not match axis count");
  }
  double total = 0.0;
  for (int i = 0; i < axis.count; ++i) total += axis.weight(i) * values[static_cast<std::size_t>(i)];
  return total;
}

// <w^2> of a unit-norm nonnegative density, w = projection onto `direction`;
// norm, sign, and moment are gathered in one sweep (fields can run to GBs),
// with the norm accumulated in integrate_2d's exact summation order
inline double second_moment(const SampledField& field, const std::array<double, 2>& direction) {
  validate_field(field);
  const double len2 = direction[0] * direction[0] + direction[1] * direction[1];
  if (std::abs(len2 - 1.0) > 1e-9) {
    throw invalid_parameter("direction must be a unit 2-vector");
  }
  const Grid1D& az = field.grid.axis_z;
  const Grid1D& at = field.grid.axis_t;
  double min_value = 0.0;
  double norm = 0.0;
  double moment = 0.0;
  for (int i = 0; i < az.count; ++i) {
    const double z = az.node(i);
    const double wz = az.weight(i);
    double norm_row = 0.0;
    double moment_row = 0.0;
    for (int j = 0; j < at.count; ++j) {
      const double v = field.value_at(i, j);
      min_value = std::min(min_value, v);
      const double wt = at.weight(j);
      norm_row += wt * v;
      const double w = direction[0] * z + direction[1] * at.node(j);
      moment_row += wt * w * w * v;
    }
    norm += wz * norm_row;
    moment += wz * moment_row;
  }
  if (min_value < -1e-12) {
    throw precondition_error("second_moment requires a nonnegative density, min value " +
                             std::to_string(min_value));
  }
  if (std::abs(norm - 1.0) > 1e-6) {
    throw precondition_error("second_moment requires unit norm, integrate_2d gives " +
                             std::to_string(norm));
  }
  return moment;
}

// centered second differences (d2z, d2t) at an interior node
inline std::pair<double, double> laplacian_stencil(const SampledField& field, int iz, int it) {
  validate_field(field);
  if (iz < 1 || iz > field.grid.axis_z.count - 2 || it < 1 || it > field.grid.axis_t.count - 2) {
    throw std::out_of_range("stencil index (" + std::to_string(iz) + ", " + std::to_string(it) +
                            ") must be at least one node from every edge");
  }
  const double hz = field.grid.axis_z.spacing();
  const double ht = field.grid.axis_t.spacing();
  const double center = field.value_at(iz, it);
  const double d2z =
      (field.value_at(iz + 1, it) - 2.0 * center + field.value_at(iz - 1, it)) / (hz * hz);
  const double d2t =
      (field.value_at(iz, it + 1) - 2.0 * center + field.value_at(iz, it - 1)) / (ht * ht);
  return {d2z, d2t};
}

}  // namespace covosc
