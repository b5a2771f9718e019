#include "phidim/homology.hpp"

#include <algorithm>

namespace phidim {

TruncatedAlgebra::TruncatedAlgebra(Quiver quiver, std::size_t k) : quiver_(std::move(quiver)), k_(k) {
  if (k_ < 2) throw DomainError("truncation exponent k must be at least 2, got " + std::to_string(k_));
}

TruncatedAlgebra make_algebra(Quiver q, std::size_t k) { return TruncatedAlgebra(std::move(q), k); }

TruncatedAlgebra opposite(const TruncatedAlgebra& a) { return TruncatedAlgebra(opposite(a.quiver()), a.k()); }

StableBasis::StableBasis(std::vector<Generator> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i], i);
}

std::size_t StableBasis::index_of(const Generator& g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    throw DomainError("M^" + std::to_string(g.level) + "_" + std::to_string(g.vertex) + " has zero stable class");
  return it->second;
}

StableBasis stable_basis(const TruncatedAlgebra& a) {
  const std::size_t k = a.k();
  const PathExistence paths(a.quiver(), k);
  std::vector<Generator> entries;
  for (std::size_t l = 1; l < k; ++l)
    for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v)
      if (paths.into(v, l) && paths.out_of(v, k - l)) entries.push_back({v, l});
  return StableBasis(std::move(entries));
}

namespace {

// Path-count matrices A^0..A^max.
std::vector<IntMatrix> adjacency_powers(const Quiver& q, std::size_t max) {
  std::vector<IntMatrix> powers;
  powers.reserve(max + 1);
  powers.push_back(IntMatrix::identity(q.vertex_count()));
  const IntMatrix adj = adjacency(q);
  for (std::size_t j = 1; j <= max; ++j) powers.push_back(mat_mul(powers.back(), adj));
  return powers;
}

IntMatrix columns_of(const std::vector<ClassVector>& vectors, std::size_t rows) {
  IntMatrix m(rows, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].coefficients.size() != rows)
      throw ShapeError("class vector of length " + std::to_string(vectors[c].coefficients.size()) +
                       " against a basis of size " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = vectors[c].coefficients[r];
  }
  return m;
}

}  // namespace

ClassVector syzygy_of_generator(const TruncatedAlgebra& a, std::size_t vertex, std::size_t level) {
  const StableBasis basis = stable_basis(a);
  basis.index_of({vertex, level});
  const std::size_t target = a.k() - level;
  const IntMatrix paths = mat_pow(adjacency(a.quiver()), target);
  ClassVector out{std::vector<Integer>(basis.size())};
  for (std::size_t w = 0; w < a.quiver().vertex_count(); ++w) {
    const Generator g{w, target};
    if (basis.contains(g)) out.coefficients[basis.index_of(g)] = paths(vertex, w);
  }
  return out;
}

SyzygyOperator syzygy_operator(const TruncatedAlgebra& a) {
  StableBasis basis = stable_basis(a);
  const auto powers = adjacency_powers(a.quiver(), a.k() - 1);
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [v, l] = basis.entries()[col];
    const std::size_t target = a.k() - l;
    for (std::size_t w = 0; w < a.quiver().vertex_count(); ++w) {
      const Generator g{w, target};
      if (basis.contains(g)) m(basis.index_of(g), col) = powers[target](v, w);
    }
  }
  return {std::move(basis), std::move(m)};
}

PhiReport rank_sequence(const SyzygyOperator& op, const std::vector<ClassVector>& generators) {
  const std::size_t n = op.basis.size();
  if (op.matrix.rows() != n || op.matrix.cols() != n) throw ShapeError("operator matrix does not match its basis");
  IntMatrix span = columns_of(generators, n);

  std::size_t bound = 0;
  {
    IntMatrix power = IntMatrix::identity(n);
    std::size_t prev = n;
    for (;;) {
      power = mat_mul(op.matrix, power);
      const std::size_t r = rank(power);
      if (r == prev) break;
      prev = r;
      ++bound;
    }
  }

  PhiReport report;
  report.stabilization_bound = bound;
  for (std::size_t i = 0; i <= bound; ++i) {
    report.rank_sequence.push_back(rank(span));
    if (i < bound) span = mat_mul(op.matrix, span);
  }
  const std::size_t last = report.rank_sequence.back();
  report.phi = static_cast<std::size_t>(
      std::find(report.rank_sequence.begin(), report.rank_sequence.end(), last) - report.rank_sequence.begin());
  return report;
}

PhiReport phi_of_generators(const TruncatedAlgebra& a, const std::vector<Generator>& summands) {
  SyzygyOperator op = syzygy_operator(a);
  std::vector<ClassVector> vectors;
  for (const auto& g : summands) {
    if (g.level < 1 || g.level >= a.k())
      throw DomainError("level " + std::to_string(g.level) + " outside 1.." + std::to_string(a.k() - 1));
    if (g.vertex >= a.quiver().vertex_count()) throw LookupError("vertex index " + std::to_string(g.vertex) + " out of range");
    if (!op.basis.contains(g)) continue;
    ClassVector unit{std::vector<Integer>(op.basis.size())};
    unit.coefficients[op.basis.index_of(g)] = 1;
    vectors.push_back(std::move(unit));
  }
  return rank_sequence(op, vectors);
}

bool is_self_injective(const TruncatedAlgebra& a) {
  for (const auto& component : connected_components(a.quiver())) {
    const Quiver sub = full_subquiver(a.quiver(), component);
    const bool simple = sub.vertex_count() == 1 && sub.arrow_count() == 0;
    if (!simple && !is_cycle(sub)) return false;
  }
  return true;
}

PhiDimReport phi_dim_report(const TruncatedAlgebra& a) {
  PhiDimReport out;
  const StableBasis basis = stable_basis(a);
  out.basis_size = basis.size();
  out.generators = phi_of_generators(a, basis.entries());
  out.self_injective = is_self_injective(a);
  // Non-self-injective: phidim = 1 + phi(sum of rho*A over paths of positive
  // length). With J^k = 0 the basis is empty and this gives gldim = 1.
  out.phidim = out.self_injective ? 0 : 1 + out.generators.phi;
  return out;
}

std::size_t phi_dim(const TruncatedAlgebra& a) { return phi_dim_report(a).phidim; }

ExtCount gldim(const TruncatedAlgebra& a) {
  const ExtCount longest = longest_path_length(a.quiver());
  if (longest.is_infinite()) return longest;
  const std::size_t l = longest.value();
  const std::size_t k = a.k();
  if (l % k == 0) return ExtCount::finite(2 * (l / k));
  return ExtCount::finite(2 * (l / k) + 1);
}

std::size_t f_k(std::size_t k, std::size_t m) {
  if (k < 2) throw DomainError("f_k needs k >= 2, got " + std::to_string(k));
  if (m == 0) return 0;
  if (m % k == 1 % k) return 2 * ((m - 1) / k) + 1;
  if (m % k == 2 % k) return 2 * ((m - 2) / k) + 2;
  return 2 * ((m - 2 + k - 1) / k) + 1;
}

std::size_t phidim_by_formula(const TruncatedAlgebra& a) {
  const auto cls = classify_vertices(a.quiver());
  if (!cls.sources.empty() || !cls.sinks.empty()) throw DomainError("closed formula needs a quiver without sources or sinks");
  if (is_self_injective(a)) throw DomainError("closed formula needs a non self-injective algebra");
  const std::size_t d2 = phi_dim(make_algebra(a.quiver(), 2));
  return f_k(a.k(), d2);
}

PhiOneVerdict classify_phidim_one_verdict(const TruncatedAlgebra& a) {
  if (is_self_injective(a)) return {false, "self-injective"};
  const ExtCount longest = longest_path_length(a.quiver());
  if (!longest.is_infinite() && longest.value() < a.k()) return {true, "J^k = 0"};
  const auto core = reduced_core(a.quiver(), a.k());
  if (!core) return {false, "empty core"};
  if (determinant(adjacency(*core)) != 0) return {true, "det core != 0"};
  return {false, "det core = 0"};
}

bool classify_phidim_one(const TruncatedAlgebra& a) { return classify_phidim_one_verdict(a).holds; }

std::size_t phi_upper_bound(const TruncatedAlgebra& a) { return f_k(a.k(), a.quiver().vertex_count()); }

SmallPhiReport check_small_phidim_remark(const TruncatedAlgebra& a) {
  SmallPhiReport out;
  out.phidim = phi_dim(a);
  const std::size_t n = a.quiver().vertex_count();
  const std::size_t k = a.k();
  const auto cls = classify_vertices(a.quiver());
  const bool closed = cls.sources.empty() && cls.sinks.empty();
  if (closed) {
    const std::size_t d2 = k == 2 ? out.phidim : phi_dim(make_algebra(a.quiver(), 2));
    if (d2 == 1) out.no_source_sink_d2_one = {true, out.phidim == 1};
    if (d2 == 2 && k >= n) out.large_k_d2_two = {true, out.phidim == 2};
  }
  if (n >= 3 && k + 1 >= n) out.k_at_least_n_minus_one = {true, out.phidim <= 3};
  return out;
}

}  // namespace phidim
