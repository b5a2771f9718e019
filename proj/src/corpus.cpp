#include "phidim/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace phidim {

std::string to_string(QuiverKind kind) {
  switch (kind) {
    case QuiverKind::Acyclic: return "acyclic";
    case QuiverKind::NoSourceSink: return "no-source-sink";
    case QuiverKind::CycleUnion: return "cycle-union";
    case QuiverKind::General: return "general";
  }
  return "unknown";
}

std::size_t QuiverSampler::draw(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

bool QuiverSampler::coin(unsigned numerator, unsigned denominator) { return draw(1, denominator) <= numerator; }

Quiver QuiverSampler::acyclic(std::size_t n, unsigned max_mult) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(0, i - 1)]);
  const unsigned density = static_cast<unsigned>(draw(1, 3));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(density, 5)) m(order[i], order[j]) = static_cast<unsigned long>(draw(1, max_mult));
  return Quiver(std::move(m));
}

Quiver QuiverSampler::general(std::size_t n, unsigned max_mult) {
  const unsigned density = static_cast<unsigned>(draw(1, 4));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(density, 10)) m(i, j) = static_cast<unsigned long>(draw(1, max_mult));
  return Quiver(std::move(m));
}

Quiver QuiverSampler::no_source_sink(std::size_t n, unsigned max_mult) {
  Quiver base = general(n, max_mult);
  IntMatrix m = base.arrow_mult();
  // Adding arrows never creates a source or sink, so one pass per side does it.
  const auto cls = classify_vertices(base);
  for (std::size_t v : cls.sources) m(draw(0, n - 1), v) += 1;
  Quiver mid(std::move(m));
  IntMatrix m2 = mid.arrow_mult();
  for (std::size_t v : classify_vertices(mid).sinks) m2(v, draw(0, n - 1)) += 1;
  return Quiver(std::move(m2));
}

Quiver QuiverSampler::cycle_union(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(0, i - 1)]);
  IntMatrix m(n, n);
  std::size_t start = 0;
  while (start < n) {
    const std::size_t len = draw(1, n - start);
    // Occasionally leave a single vertex without arrows.
    if (len == 1 && coin(1, 4)) {
      ++start;
      continue;
    }
    for (std::size_t i = 0; i < len; ++i) m(order[start + i], order[start + (i + 1) % len]) += 1;
    start += len;
  }
  if (coin(1, 2)) m(draw(0, n - 1), draw(0, n - 1)) += 1;
  return Quiver(std::move(m));
}

Quiver QuiverSampler::sample(QuiverKind kind, std::size_t n, unsigned max_mult) {
  switch (kind) {
    case QuiverKind::Acyclic: return acyclic(n, max_mult);
    case QuiverKind::NoSourceSink: return no_source_sink(n, max_mult);
    case QuiverKind::CycleUnion: return cycle_union(n);
    case QuiverKind::General: return general(n, max_mult);
  }
  return general(n, max_mult);
}

std::vector<Generator> QuiverSampler::summands(const TruncatedAlgebra& a, std::size_t max_count) {
  const std::size_t count = draw(0, max_count);
  std::vector<Generator> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({draw(0, a.quiver().vertex_count() - 1), draw(1, a.k() - 1)});
  return out;
}

std::vector<CorpusCase> make_corpus(const CorpusConfig& config) {
  static constexpr QuiverKind kCycle[] = {QuiverKind::Acyclic, QuiverKind::NoSourceSink, QuiverKind::NoSourceSink,
                                          QuiverKind::CycleUnion, QuiverKind::General};
  QuiverSampler sampler(config.seed);
  const std::size_t max_k = std::max<std::size_t>(config.max_k, 2);
  const std::size_t max_n = std::max<std::size_t>(config.max_vertices, 1);
  std::vector<CorpusCase> out;
  out.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    const QuiverKind kind = kCycle[i % 5];
    const std::size_t n = sampler.draw(1, max_n);
    const std::size_t k = sampler.draw(2, max_k);
    out.push_back({i, kind, make_algebra(sampler.sample(kind, n, std::max(1U, config.max_multiplicity)), k)});
  }
  return out;
}

}  // namespace phidim
