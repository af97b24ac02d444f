#pragma once

#include <optional>
#include <random>
#include <vector>

namespace qch {

inline constexpr double kNormTol = 1e-9;
inline constexpr double kBoundaryTol = 1e-9;

/// |x|^2 for a coordinate vector.
double norm_squared(const std::vector<double>& x);

bool is_unit(const std::vector<double>& x, double tol = kNormTol);

/// Sphere quandle operation x*y = 2(x.y)y - x; throws std::domain_error on
/// non-unit input.
std::vector<double> sphere_op(const std::vector<double>& x, const std::vector<double>& y);

/// Which side of the canonical half-space a point lies on, scanning
/// coordinates from the last index down: an exactly-zero coordinate defers
/// to the next one, a coordinate smaller than the tolerance in magnitude is
/// ambiguous, otherwise the sign decides.
enum class Region { Positive, Negative, Boundary };
Region classify_halfspace(const std::vector<double>& v, double tol = kBoundaryTol);

/// Canonical representative of [v] with the representative in the positive
/// half-space. nullopt when v is too close to the half-space boundary for
/// the sign decision to be trusted.
struct ProjectivePoint {
  std::vector<double> rep;
};
std::optional<ProjectivePoint> project(const std::vector<double>& v,
                                       double tol = kBoundaryTol);

/// 0 if s([x])*s([y]) lands in the positive half-space, 1 if in the negative
/// one, nullopt if boundary-ambiguous. Exact Z/2 value otherwise.
std::optional<int> sphere_cocycle(const ProjectivePoint& x, const ProjectivePoint& y);

/// Uniform random point on S^{dim-1}.
std::vector<double> random_unit_vector(std::mt19937& rng, int dim);

}  // namespace qch
