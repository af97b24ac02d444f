#pragma once

#include "qch/cohomology.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qch {

/// Thrown by extend() when the supplied 2-cochain is not a cocycle; carries a
/// triple violating the explicit cocycle condition.
struct NotACocycle : std::domain_error {
  std::array<int, 3> triple;
  explicit NotACocycle(std::array<int, 3> t)
      : std::domain_error("not a 2-cocycle, violated at (" + std::to_string(t[0]) + "," +
                          std::to_string(t[1]) + "," + std::to_string(t[2]) + ")"),
        triple(t) {}
};

/// Quandle on X x A with (x,a)*(y,b) = (x*y, Ta + (1-T)b + psi(x,y)),
/// flattened as (x,a) -> x*|A| + index(a).
struct ExtensionTable {
  QuandleTable total;
  std::size_t base_size = 0;
  std::size_t fiber_size = 0;
  int index(int x, std::size_t a_index) const {
    return static_cast<int>(x * fiber_size + a_index);
  }
};

/// Builds the extension; throws NotACocycle if psi fails the cocycle check.
ExtensionTable extend(const QuandleTable& x, const CoefficientModule& a,
                      const CochainVec& psi);

/// Witness g with delta g = psi - phi (so f(x,a) = (x, a + g(x)) maps one
/// total quandle onto the other), or nullopt when the classes differ.
/// Throws std::domain_error if either input is not a cocycle.
std::optional<CochainVec> equivalent(const QuandleTable& x, const CoefficientModule& a,
                                     const CochainVec& psi, const CochainVec& phi);

/// Principal extension data: projection p : E -> X, an A-action on E given as
/// one permutation of E per element index of A, and a section s : X -> E.
struct PrincipalData {
  QuandleTable total;
  QuandleTable base;
  std::vector<int> projection;
  std::vector<std::vector<int>> action;
  std::vector<int> section;
};

/// Checks all principal-extension invariants: p is a surjective quandle hom,
/// the action is a free fiber-transitive A-action commuting with p, both
/// equivariance identities hold, and p o s = id. Returns a description of
/// the first violation, or nullopt.
std::optional<std::string> validate_principal(const PrincipalData& d,
                                              const CoefficientModule& a);

/// The unique a with s(x)*s(y) = s(x*y) . a, per non-degenerate pair.
/// Throws std::domain_error if validation fails.
CochainVec extract_principal_cocycle(const PrincipalData& d, const CoefficientModule& a);

/// True iff the extracted cocycle vanishes identically; a non-vanishing value
/// rules out continuity of the cocycle when the fiber group is discrete and
/// the base is connected.
bool discrete_fiber_vanishing_check(const PrincipalData& d, const CoefficientModule& a,
                                    const CochainVec& phi);

/// PrincipalData of an untwisted extension with the fiber translation action
/// and the zero section, for round-trip checks.
PrincipalData principal_from_extension(const QuandleTable& x, const CoefficientModule& a,
                                       const ExtensionTable& e);

}  // namespace qch
