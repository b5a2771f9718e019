#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phidim/exactmat.hpp"
#include "phidim/quiver.hpp"

namespace phidim {

/// Thrown when a constructed quiver fails its own phi-dimension check.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using RatVector = std::vector<Rational>;

struct ConstructionInput {
  std::size_t n = 0;
  RatVector v_n;
  RatVector w_n;
  std::optional<std::vector<RatVector>> perp_basis;
  /// Raise lambda until every entry of the conjugate is strictly positive.
  bool strict_positive = false;

  /// v = all ones, w = all 1/n.
  static ConstructionInput uniform(std::size_t n);
};

struct ConstructionReport {
  Quiver quiver;
  std::size_t lambda = 0;
  Integer scale_m;
  RatMatrix conjugator;
  std::size_t achieved_phidim = 0;
};

/// Nilpotent Jordan block of size n-1 (ones on the subdiagonal) plus lambda
/// in the last diagonal slot.
IntMatrix canonical_m_lambda(std::size_t n, std::size_t lambda);

/// Deterministic basis of the orthogonal complement of w: e_j for each zero
/// coordinate j, and e_i - (w_i / w_j) e_j for consecutive nonzero coordinates
/// i < j. Ordered by leading index.
std::vector<RatVector> complete_perp_basis(const RatVector& w);

/// Least lambda >= 2 making conj * M_lambda * conj^-1 entrywise >= 0 (> 0 when
/// strict). Requires the last column of conj and the last row of its inverse
/// to be strictly positive.
std::size_t choose_lambda(const RatMatrix& conj, bool strict = false);

/// m = lcm of the denominators, and m * matrix as integers.
std::pair<Integer, IntMatrix> scale_to_integer(const RatMatrix& m);

/// Full construction; the result is verified to have radical-square-zero
/// phi-dimension n before it is returned.
ConstructionReport construct_maximal(const ConstructionInput& input);

Quiver scale_preserves_maximal(const Quiver& q, const Integer& m);

}  // namespace phidim
