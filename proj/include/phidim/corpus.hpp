#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phidim/homology.hpp"
#include "phidim/quiver.hpp"

namespace phidim {

enum class QuiverKind { Acyclic, NoSourceSink, CycleUnion, General };

std::string to_string(QuiverKind kind);

struct CorpusConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  std::size_t max_vertices = 6;
  std::size_t max_k = 4;
  unsigned max_multiplicity = 2;
};

struct CorpusCase {
  std::size_t index;
  QuiverKind kind;
  TruncatedAlgebra algebra;
};

/// Seeded pseudo-random quiver source. Draws are taken from the raw engine
/// output so the stream is identical across standard libraries.
class QuiverSampler {
 public:
  explicit QuiverSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::size_t draw(std::size_t lo, std::size_t hi);
  bool coin(unsigned numerator, unsigned denominator);

  Quiver acyclic(std::size_t n, unsigned max_mult);
  Quiver no_source_sink(std::size_t n, unsigned max_mult);
  Quiver cycle_union(std::size_t n);
  Quiver general(std::size_t n, unsigned max_mult);
  Quiver sample(QuiverKind kind, std::size_t n, unsigned max_mult);

  /// Random (with repetition) list of generator pairs with levels in 1..k-1.
  std::vector<Generator> summands(const TruncatedAlgebra& a, std::size_t max_count);

 private:
  std::mt19937_64 engine_;
};

/// Corpus with kinds cycling Acyclic, NoSourceSink, NoSourceSink, CycleUnion,
/// General, so at least 20% of cases are acyclic and 40% lack sources and sinks.
std::vector<CorpusCase> make_corpus(const CorpusConfig& config);

}  // namespace phidim
