#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phidim/exactmat.hpp"
#include "phidim/quiver.hpp"

namespace phidim {

/// kQ/J^k with k >= 2.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(Quiver quiver, std::size_t k);

  const Quiver& quiver() const noexcept { return quiver_; }
  std::size_t k() const noexcept { return k_; }

 private:
  Quiver quiver_;
  std::size_t k_;
};

TruncatedAlgebra make_algebra(Quiver q, std::size_t k);
TruncatedAlgebra opposite(const TruncatedAlgebra& a);

/// Class of the generator module M^l_v: the right ideal rho*A for any path rho
/// of length `level` ending at `vertex`.
struct Generator {
  std::size_t vertex;
  std::size_t level;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Basis of K_1(A): the generators whose class is nonzero (the module exists
/// and is not projective). Level-major order, then vertex index.
class StableBasis {
 public:
  StableBasis() = default;
  explicit StableBasis(std::vector<Generator> entries);

  const std::vector<Generator>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(const Generator& g) const { return index_.count(g) != 0; }
  std::size_t index_of(const Generator& g) const;

 private:
  std::vector<Generator> entries_;
  std::map<Generator, std::size_t> index_;
};

StableBasis stable_basis(const TruncatedAlgebra& a);

struct ClassVector {
  std::vector<Integer> coefficients;
};

/// Matrix of the syzygy endomorphism on K_1 in the stable basis; column j holds
/// the class of Omega(M) for the j-th basis generator M.
struct SyzygyOperator {
  StableBasis basis;
  IntMatrix matrix;
};

ClassVector syzygy_of_generator(const TruncatedAlgebra& a, std::size_t vertex, std::size_t level);
SyzygyOperator syzygy_operator(const TruncatedAlgebra& a);

struct PhiReport {
  std::vector<std::size_t> rank_sequence;
  std::size_t phi = 0;
  std::size_t stabilization_bound = 0;
};

/// Ranks of Omega^i W for the span W of the generators, i = 0..L, where L is
/// the first exponent at which the rank of the operator's powers stops
/// dropping. Past L the operator is injective on its image, so every
/// subgroup rank is constant from there on.
PhiReport rank_sequence(const SyzygyOperator& op, const std::vector<ClassVector>& generators);

/// phi of the direct sum of the given M^l_v. Pairs whose class vanishes are
/// dropped; duplicates are kept.
PhiReport phi_of_generators(const TruncatedAlgebra& a, const std::vector<Generator>& summands);

/// Every component of the quiver is an oriented cycle or a single vertex
/// without arrows.
bool is_self_injective(const TruncatedAlgebra& a);

std::size_t phi_dim(const TruncatedAlgebra& a);
/// phi_dim together with the rank report of the full generator sum.
struct PhiDimReport {
  std::size_t phidim = 0;
  bool self_injective = false;
  PhiReport generators;
  std::size_t basis_size = 0;
};
PhiDimReport phi_dim_report(const TruncatedAlgebra& a);

ExtCount gldim(const TruncatedAlgebra& a);

std::size_t f_k(std::size_t k, std::size_t m);

/// Closed form for quivers without sources or sinks: f_k of the
/// radical-square-zero phi-dimension.
std::size_t phidim_by_formula(const TruncatedAlgebra& a);

struct PhiOneVerdict {
  bool holds = false;
  std::string reason;
};
PhiOneVerdict classify_phidim_one_verdict(const TruncatedAlgebra& a);
bool classify_phidim_one(const TruncatedAlgebra& a);

std::size_t phi_upper_bound(const TruncatedAlgebra& a);

struct RemarkBullet {
  bool applies = false;
  bool holds = true;
};
struct SmallPhiReport {
  std::size_t phidim = 0;
  RemarkBullet no_source_sink_d2_one;
  RemarkBullet large_k_d2_two;
  RemarkBullet k_at_least_n_minus_one;
  bool all_hold() const {
    return no_source_sink_d2_one.holds && large_k_d2_two.holds && k_at_least_n_minus_one.holds;
  }
};
SmallPhiReport check_small_phidim_remark(const TruncatedAlgebra& a);

}  // namespace phidim
