#include "qch/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace qch {

double norm_squared(const std::vector<double>& x) {
  double s = 0;
  for (double c : x) s += c * c;
  return s;
}

bool is_unit(const std::vector<double>& x, double tol) {
  return std::abs(norm_squared(x) - 1.0) <= tol;
}

std::vector<double> sphere_op(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("sphere_op: dimension mismatch");
  if (!is_unit(x) || !is_unit(y)) throw std::domain_error("sphere_op: non-unit input");
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] * y[i];
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = 2 * d * y[i] - x[i];
  return r;
}

Region classify_halfspace(const std::vector<double>& v, double tol) {
  for (std::size_t i = v.size(); i-- > 0;) {
    double c = v[i];
    if (c == 0.0) continue;
    if (std::abs(c) < tol) return Region::Boundary;
    return c > 0 ? Region::Positive : Region::Negative;
  }
  return Region::Boundary;  // zero vector, never canonical
}

std::optional<ProjectivePoint> project(const std::vector<double>& v, double tol) {
  switch (classify_halfspace(v, tol)) {
    case Region::Boundary:
      return std::nullopt;
    case Region::Positive:
      return ProjectivePoint{v};
    case Region::Negative: {
      std::vector<double> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] == 0.0 ? 0.0 : -v[i];
      return ProjectivePoint{std::move(w)};
    }
  }
  return std::nullopt;
}

std::optional<int> sphere_cocycle(const ProjectivePoint& x, const ProjectivePoint& y) {
  switch (classify_halfspace(sphere_op(x.rep, y.rep))) {
    case Region::Positive:
      return 0;
    case Region::Negative:
      return 1;
    case Region::Boundary:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<double> random_unit_vector(std::mt19937& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    std::vector<double> v(dim);
    for (auto& c : v) c = g(rng);
    double n = std::sqrt(norm_squared(v));
    if (n < 1e-6) continue;
    for (auto& c : v) c /= n;
    // Nudge the largest coordinate by ulps until the computed squared norm is
    // exactly 1.0, so that idempotency of the operation holds bit-for-bit.
    std::size_t mi = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[mi])) mi = i;
    double orig = v[mi];
    for (int k = -25; k <= 25; ++k) {
      double c = orig;
      for (int j = 0; j < (k < 0 ? -k : k); ++j)
        c = std::nextafter(c, k > 0 ? INFINITY : -INFINITY);
      v[mi] = c;
      if (norm_squared(v) == 1.0) return v;
    }
  }
}

}  // namespace qch
