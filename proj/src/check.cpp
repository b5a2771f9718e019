#include "phidim/check.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "phidim/constructor.hpp"
#include "phidim/families.hpp"

namespace phidim {

namespace {

struct Outcome {
  std::string property;
  bool passed;
  std::string detail;
};

class CaseChecker {
 public:
  CaseChecker(const CorpusCase& c, std::uint64_t seed)
      : case_(c), sampler_(seed * 1000003ULL + c.index) {}

  std::vector<Outcome> run() {
    const TruncatedAlgebra& a = case_.algebra;
    const Quiver& q = a.quiver();
    const std::size_t d = phi_dim(a);
    const auto cls = classify_vertices(q);
    const bool closed = cls.sources.empty() && cls.sinks.empty();
    const bool self_inj = is_self_injective(a);

    const std::size_t d_op = phi_dim(opposite(a));
    expect("symmetry", d == d_op, "phidim " + std::to_string(d) + " vs opposite " + std::to_string(d_op));

    const std::size_t bound = phi_upper_bound(a);
    expect("bound", d <= bound, "phidim " + std::to_string(d) + " > f_k(n) " + std::to_string(bound));

    expect("self-injective", (d == 0) == self_inj,
           "phidim " + std::to_string(d) + ", self-injective " + (self_inj ? "yes" : "no"));

    if (closed && !self_inj) {
      const std::size_t f = phidim_by_formula(a);
      expect("closed-formula", f == d, "formula " + std::to_string(f) + " vs phidim " + std::to_string(d));
      check_two_step_periodicity(a);
    }

    const auto verdict = classify_phidim_one_verdict(a);
    expect("phidim-one", verdict.holds == (d == 1), "classifier says " + verdict.reason + ", phidim " + std::to_string(d));

    const std::size_t saturated = phi_dim(make_algebra(saturate_with_loops(q), a.k()));
    expect("saturation", d <= saturated, "phidim " + std::to_string(d) + " > saturated " + std::to_string(saturated));

    const ExtCount gl = gldim(a);
    if (!gl.is_infinite())
      expect("finite-gldim", gl.value() == d, "gldim " + gl.to_string() + " vs phidim " + std::to_string(d));

    const auto remark = check_small_phidim_remark(a);
    expect("small-phidim-remark", remark.all_hold(), "phidim " + std::to_string(remark.phidim));

    check_phi_properties(a);

    const SyzygyOperator op = syzygy_operator(a);
    const std::size_t r1 = rank(op.matrix), r2 = rank_smith(op.matrix);
    expect("rank-agreement", r1 == r2, "bareiss " + std::to_string(r1) + " vs smith " + std::to_string(r2));
    return std::move(outcomes_);
  }

 private:
  void expect(const std::string& property, bool ok, const std::string& detail) {
    outcomes_.push_back({property, ok, ok ? std::string() : detail});
  }

  void check_two_step_periodicity(const TruncatedAlgebra& a) {
    const SyzygyOperator op = syzygy_operator(a);
    const IntMatrix square = mat_mul(op.matrix, op.matrix);
    const IntMatrix walk = mat_pow(adjacency(a.quiver()), a.k());
    bool ok = op.basis.size() == a.quiver().vertex_count() * (a.k() - 1);
    for (std::size_t r = 0; ok && r < op.basis.size(); ++r) {
      for (std::size_t c = 0; c < op.basis.size(); ++c) {
        const Generator row = op.basis.entries()[r], col = op.basis.entries()[c];
        // Column convention: column = source class, so the block is walk^T.
        const Integer expected = row.level == col.level ? walk(col.vertex, row.vertex) : Integer(0);
        if (square(r, c) != expected) {
          ok = false;
          break;
        }
      }
    }
    expect("two-step-periodicity", ok, "square of the syzygy operator is not diag(M^k)");
  }

  void check_phi_properties(const TruncatedAlgebra& a) {
    const std::size_t k = a.k();
    std::vector<Generator> small = sampler_.summands(a, 4);
    std::vector<Generator> large = small;
    const auto extra = sampler_.summands(a, 4);
    large.insert(large.end(), extra.begin(), extra.end());

    const std::size_t phi_small = phi_of_generators(a, small).phi;
    const std::size_t phi_large = phi_of_generators(a, large).phi;
    expect("monotonicity", phi_small <= phi_large,
           "phi(S) " + std::to_string(phi_small) + " > phi(T) " + std::to_string(phi_large));

    std::vector<Generator> doubled = small;
    doubled.insert(doubled.end(), small.begin(), small.end());
    const std::size_t phi_doubled = phi_of_generators(a, doubled).phi;
    expect("multiplicity", phi_doubled == phi_small,
           "phi(S+S) " + std::to_string(phi_doubled) + " != phi(S) " + std::to_string(phi_small));

    // Omega(M^l_v) = sum over length-(k-l) paths from v of M^{k-l}_{target}.
    const StableBasis basis = stable_basis(a);
    const IntMatrix adj = adjacency(a.quiver());
    std::vector<Generator> syzygies;
    for (const auto& g : small) {
      if (!basis.contains(g)) continue;
      const IntMatrix paths = mat_pow(adj, k - g.level);
      for (std::size_t w = 0; w < a.quiver().vertex_count(); ++w)
        if (paths(g.vertex, w) != 0) syzygies.push_back({w, k - g.level});
    }
    const std::size_t phi_syz = phi_of_generators(a, syzygies).phi;
    expect("syzygy-step", phi_small <= phi_syz + 1,
           "phi(M) " + std::to_string(phi_small) + " > phi(Omega M) + 1 = " + std::to_string(phi_syz + 1));
  }

  const CorpusCase& case_;
  QuiverSampler sampler_;
  std::vector<Outcome> outcomes_;
};

}  // namespace

std::string CheckSummary::render() const {
  std::ostringstream out;
  out << "cases: " << cases << '\n';
  for (const auto& [name, tally] : tallies)
    out << (tally.failed == 0 ? "PASS " : "FAIL ") << name << ": " << tally.checked - tally.failed << '/' << tally.checked
        << '\n';
  for (const auto& f : failures) {
    out << "failure in case " << f.case_index << " [" << f.property << "] k=" << f.k << ": " << f.detail << '\n';
    out << f.quiver_text;
  }
  out << (passed() ? "all checks passed" : std::to_string(failures.size()) + " check(s) failed") << '\n';
  return out.str();
}

CheckSummary run_check_suite(const CorpusConfig& config, unsigned workers) {
  const auto corpus = make_corpus(config);
  std::vector<std::vector<Outcome>> results(corpus.size());
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(corpus.size(), 1));

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < corpus.size(); i += workers) {
        try {
          results[i] = CaseChecker(corpus[i], config.seed).run();
        } catch (const std::exception& e) {
          results[i] = {{"no-exception", false, e.what()}};
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  CheckSummary summary;
  summary.cases = corpus.size();
  // Constructor outputs attain the bound for small n.
  for (std::size_t n = 2; n <= 4; ++n) {
    auto& tally = summary.tallies["constructor-maximal"];
    ++tally.checked;
    try {
      const auto report = construct_maximal(ConstructionInput::uniform(n));
      if (report.achieved_phidim != f_k(2, n)) throw InternalInconsistency("bound not attained");
    } catch (const std::exception& e) {
      ++tally.failed;
      summary.failures.push_back({0, "constructor-maximal", "n=" + std::to_string(n) + ": " + e.what(), "", 2});
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& o : results[i]) {
      auto& tally = summary.tallies[o.property];
      ++tally.checked;
      if (!o.passed) {
        ++tally.failed;
        summary.failures.push_back(
            {i, o.property, o.detail, serialize_quiver(corpus[i].algebra.quiver()), corpus[i].algebra.k()});
      }
    }
  }
  return summary;
}

}  // namespace phidim
