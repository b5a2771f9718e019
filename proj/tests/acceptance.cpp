// Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "phidim/constructor.hpp"
#include "phidim/corpus.hpp"
#include "phidim/families.hpp"
#include "phidim/homology.hpp"

using namespace phidim;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why + ";";
    ok = false;
  }
};

// Every weakly connected component is a lone arrowless vertex or an oriented cycle.
bool components_are_cycles(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q.arrows(i, j) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    for (auto v : g) {
      Integer in = 0, out = 0;
      for (std::size_t u = 0; u < n; ++u) {
        in += q.arrows(u, v);
        out += q.arrows(v, u);
      }
      if (g.size() == 1 && out == 0) continue;
      if (in != 1 || out != 1) return false;
    }
  }
  return true;
}

bool has_source_or_sink(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    bool in = false, out = false;
    for (std::size_t u = 0; u < n; ++u) {
      in = in || q.arrows(u, v) != 0;
      out = out || q.arrows(v, u) != 0;
    }
    if (!in || !out) return true;
  }
  return false;
}

std::string show(const TruncatedAlgebra& a) {
  std::string text = serialize_quiver(a.quiver());
  for (auto& ch : text)
    if (ch == '\n') ch = ';';
  return "k=" + std::to_string(a.k()) + " " + text;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % 11) - 5;
  return m;
}

Outcome gamma_family() {
  Outcome o;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t m = 2; m <= n; ++m) {
      const std::size_t d = phi_dim(make_algebra(gamma_quiver(n, m), 2));
      if (d != m - 1) o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " gives " + std::to_string(d));
    }
  o.note += "pairs (n,m): 28";
  return o;
}

Outcome cycles_and_self_injective(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 2; k <= 5; ++k)
      if (phi_dim(make_algebra(cycle_quiver(n), k)) != 0) o.fail("C^" + std::to_string(n) + " k=" + std::to_string(k));
  std::size_t zeros = 0;
  for (const auto& c : corpus) {
    if (phi_dim(c.algebra) != 0) continue;
    ++zeros;
    if (!components_are_cycles(c.algebra.quiver())) o.fail("phidim 0 on " + show(c.algebra));
  }
  o.note += "phidim-0 corpus cases: " + std::to_string(zeros);
  return o;
}

Outcome symmetry(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : corpus) {
    if (c.index >= 600) break;
    ++checked;
    if (phi_dim(c.algebra) != phi_dim(opposite(c.algebra))) o.fail(show(c.algebra));
  }
  if (checked < 500) o.fail("only " + std::to_string(checked) + " samples");
  o.note += "samples: " + std::to_string(checked);
  return o;
}

Outcome closed_formula(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : corpus) {
    if (has_source_or_sink(c.algebra.quiver()) || components_are_cycles(c.algebra.quiver())) continue;
    ++checked;
    if (phidim_by_formula(c.algebra) != phi_dim(c.algebra)) o.fail(show(c.algebra));
  }
  if (checked < 200) o.fail("only " + std::to_string(checked) + " instances");
  o.note += "instances: " + std::to_string(checked);
  return o;
}

Outcome upper_bound(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  for (const auto& c : corpus)
    if (phi_dim(c.algebra) > f_k(c.algebra.k(), c.algebra.quiver().vertex_count())) o.fail(show(c.algebra));
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = construct_maximal(ConstructionInput::uniform(n));
    if (phi_dim(make_algebra(r.quiver, 2)) != f_k(2, n)) o.fail("constructor n=" + std::to_string(n) + " misses bound");
  }
  o.note += "corpus: " + std::to_string(corpus.size()) + ", attained for n = 2, 3, 4";
  return o;
}

Outcome construction() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = construct_maximal(ConstructionInput::uniform(n));
    if (r.achieved_phidim != n || phi_dim(make_algebra(r.quiver, 2)) != n) o.fail("n=" + std::to_string(n));
    for (unsigned m : {2U, 3U}) {
      const Quiver scaled = scale_preserves_maximal(r.quiver, Integer(m));
      if (phi_dim(make_algebra(scaled, 2)) != n) o.fail("n=" + std::to_string(n) + " scaled by " + std::to_string(m));
    }
  }
  o.note += "n = 2, 3, 4; m = 2, 3";
  return o;
}

Outcome phidim_one(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  std::size_t acyclic = 0, cored = 0;
  for (const auto& c : corpus) {
    const Quiver& q = c.algebra.quiver();
    if (!longest_path_length(q).is_infinite()) ++acyclic;
    if (reduced_core(q, c.algebra.k()).has_value()) ++cored;
    if (classify_phidim_one(c.algebra) != (phi_dim(c.algebra) == 1)) o.fail(show(c.algebra));
  }
  if (acyclic < 100) o.fail("only " + std::to_string(acyclic) + " acyclic");
  if (cored < 100) o.fail("only " + std::to_string(cored) + " with a core");
  o.note += "acyclic: " + std::to_string(acyclic) + ", nonempty core: " + std::to_string(cored);
  return o;
}

Outcome global_dimension() {
  Outcome o;
  QuiverSampler sampler(8080);
  const std::size_t count = 150;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = sampler.draw(1, 7);
    const std::size_t k = sampler.draw(2, 4);
    const auto a = make_algebra(sampler.acyclic(n, 2), k);
    const std::size_t brute = oracle::brute_force_gldim(a.quiver(), k);
    const ExtCount formula = gldim(a);
    if (formula != ExtCount::finite(brute)) o.fail("gldim formula " + formula.to_string() + " vs " + std::to_string(brute) + " on " + show(a));
    if (phi_dim(a) != brute) o.fail("phidim vs gldim on " + show(a));
  }
  o.note += "instances: " + std::to_string(count);
  return o;
}

// Syzygy supports computed from path counts, not from the library operator.
std::vector<Generator> syzygy_support(const TruncatedAlgebra& a, const std::vector<Generator>& summands) {
  std::vector<Generator> out;
  const std::size_t k = a.k();
  for (const auto& g : summands) {
    if (!(oracle::path_into(a.quiver(), g.vertex, g.level) && oracle::path_out_of(a.quiver(), g.vertex, k - g.level)))
      continue;
    for (std::size_t w = 0; w < a.quiver().vertex_count(); ++w)
      if (oracle::count_paths(a.quiver(), g.vertex, w, k - g.level) != 0) out.push_back({w, k - g.level});
  }
  return out;
}

Outcome phi_properties(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  QuiverSampler sampler(4242);
  std::size_t pairs = 0;
  for (const auto& c : corpus) {
    if (pairs >= 400) break;
    const auto& a = c.algebra;
    auto s = sampler.summands(a, 4);
    auto t = s;
    const auto extra = sampler.summands(a, 3);
    t.insert(t.end(), extra.begin(), extra.end());
    auto doubled = s;
    doubled.insert(doubled.end(), s.begin(), s.end());

    const std::size_t phi_s = phi_of_generators(a, s).phi;
    if (phi_s > phi_of_generators(a, t).phi) o.fail("monotonicity on " + show(a));
    if (phi_of_generators(a, doubled).phi != phi_s) o.fail("multiplicity on " + show(a));
    if (phi_s > phi_of_generators(a, syzygy_support(a, s)).phi + 1) o.fail("syzygy step on " + show(a));
    ++pairs;
  }
  if (pairs < 300) o.fail("only " + std::to_string(pairs) + " pairs");
  o.note += "pairs: " + std::to_string(pairs);
  return o;
}

Outcome a_family_grid() {
  Outcome o;
  std::size_t built = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t k = 3; k <= 4; ++k)
      for (std::size_t l = 0; l <= f_k(k, n); ++l) {
        std::optional<TruncatedAlgebra> a;
        try {
          a = a_family(n, k, l);
        } catch (const DomainError&) {
          continue;  // outside the family's parameter range
        }
        ++built;
        const std::size_t d = phi_dim(*a);
        if (d != l)
          o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " gives " +
                 std::to_string(d));
      }
  o.note += "members: " + std::to_string(built);
  return o;
}

Outcome small_phidim(const std::vector<CorpusCase>& corpus) {
  Outcome o;
  std::size_t b1 = 0, b2 = 0, b3 = 0;
  for (const auto& c : corpus) {
    const auto& a = c.algebra;
    const std::size_t n = a.quiver().vertex_count(), k = a.k();
    const std::size_t d = phi_dim(a);
    if (!has_source_or_sink(a.quiver())) {
      const std::size_t d2 = phi_dim(make_algebra(a.quiver(), 2));
      if (d2 == 1) {
        ++b1;
        if (d != 1) o.fail("bullet 1 on " + show(a));
      }
      if (d2 == 2 && k >= n) {
        ++b2;
        if (d != 2) o.fail("bullet 2 on " + show(a));
      }
    }
    if (n >= 3 && k + 1 >= n) {
      ++b3;
      if (d > 3) o.fail("bullet 3 on " + show(a));
    }
  }
  const auto example = source_sink_maximal_example(5, 3, 2);
  if (phi_dim(example) != 3) o.fail("source/sink example phidim " + std::to_string(phi_dim(example)));
  o.note += "instances per bullet: " + std::to_string(b1) + ", " + std::to_string(b2) + ", " + std::to_string(b3);
  return o;
}

Outcome arithmetic() {
  Outcome o;
  std::mt19937_64 rng(12);
  const std::size_t count = 1000;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    const IntMatrix a = random_matrix(rng, rows, cols);
    const std::size_t r = rank(a);
    if (r != rank_smith(a) || r != oracle::rational_rank(a)) o.fail("rank disagreement at sample " + std::to_string(i));
    const IntMatrix sq = random_matrix(rng, rows, rows);
    for (std::size_t s = 0; s <= 6; ++s)
      if (rank(mat_pow(sq, s)) != oracle::rational_rank(mat_pow(sq.transpose(), s)))
        o.fail("power rank at sample " + std::to_string(i) + " s=" + std::to_string(s));
  }
  o.note += "matrices: " + std::to_string(count);
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = make_corpus({.seed = 2026, .samples = 1000, .max_vertices = 6, .max_k = 4, .max_multiplicity = 2});

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"gamma family phidim = m-1, 2 <= m <= n <= 8", gamma_family},
      {"cycles have phidim 0; phidim 0 only on cycle components", [&] { return cycles_and_self_injective(corpus); }},
      {"phidim(A) = phidim(A^op)", [&] { return symmetry(corpus); }},
      {"closed formula on no-source/no-sink algebras", [&] { return closed_formula(corpus); }},
      {"phidim <= f_k(n), attained by constructor", [&] { return upper_bound(corpus); }},
      {"constructor reaches phidim n, preserved by scaling", construction},
      {"phidim-one classifier", [&] { return phidim_one(corpus); }},
      {"gldim formula vs brute-force resolution, phidim = gldim", global_dimension},
      {"phi monotone, multiplicity-free, syzygy step", [&] { return phi_properties(corpus); }},
      {"A_l family has phidim l", a_family_grid},
      {"small-phidim bullets and source/sink example", [&] { return small_phidim(corpus); }},
      {"rank = rank_smith = rational rank; power ranks transpose", arithmetic},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::printf("[%s] %zu. %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.note.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1f s\n", all ? "all criteria passed" : "some criteria FAILED", secs);
  return all ? 0 : 1;
}
