#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phidim/homology.hpp"
#include "phidim/quiver.hpp"

namespace phidim {

enum class Family { Cycle, Gamma, AFamily, SourceSinkMaximal };

struct FamilySpec {
  Family family;
  std::vector<std::size_t> parameters;
};

/// Oriented cycle on vertices 1..n; n = 1 is a single loop.
Quiver cycle_quiver(std::size_t n);

/// Loops at 1 and m, chain 1 -> 2 -> ... -> m, and for every j > m a loop
/// at j plus an arrow j -> m. Radical-square-zero phidim is m - 1.
Quiver gamma_quiver(std::size_t n, std::size_t m);

/// A quiver on n vertices whose radical-square-zero phidim is n, from the
/// Jordan-form construction with uniform inputs (n = 1: a double loop).
Quiver maximal_quiver(std::size_t n);

/// Algebra on n vertices with phidim exactly l, for 0 <= l <= f_k(n), k >= 3.
TruncatedAlgebra a_family(std::size_t n, std::size_t k, std::size_t l);

/// Maximal quiver on m vertices with a chain w_1 -> ... -> w_{n-m+1} glued
/// at w_{i0} onto its first vertex; truncated at k = n. Vertex i0 is 1-based.
TruncatedAlgebra source_sink_maximal_example(std::size_t n, std::size_t m, std::size_t i0);

/// Algebra for a family spec; Cycle and Gamma take a trailing k parameter.
TruncatedAlgebra build_family(const FamilySpec& spec);
Family parse_family_name(const std::string& name);

}  // namespace phidim
