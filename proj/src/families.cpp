#include "phidim/families.hpp"

#include "phidim/constructor.hpp"

namespace phidim {

Quiver cycle_quiver(std::size_t n) {
  if (n == 0) throw DomainError("cycle needs at least one vertex");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, (i + 1) % n) = 1;
  return Quiver(std::move(m));
}

Quiver gamma_quiver(std::size_t n, std::size_t m) {
  if (m < 1 || m > n) throw DomainError("gamma quiver needs 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  IntMatrix a(n, n);
  a(0, 0) = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) a(i, i + 1) = 1;
  a(m - 1, m - 1) = 1;
  for (std::size_t j = m; j < n; ++j) {
    a(j, j) = 1;
    a(j, m - 1) += 1;
  }
  return Quiver(std::move(a));
}

Quiver maximal_quiver(std::size_t n) {
  if (n == 0) throw DomainError("maximal quiver needs at least one vertex");
  if (n == 1) return Quiver(IntMatrix{{2}});
  return construct_maximal(ConstructionInput::uniform(n)).quiver;
}

TruncatedAlgebra a_family(std::size_t n, std::size_t k, std::size_t l) {
  if (k < 3) throw DomainError("A_l family needs k >= 3");
  if (n == 0) throw DomainError("A_l family needs n >= 1");
  const std::size_t top = f_k(k, n);
  if (l > top) throw DomainError("l = " + std::to_string(l) + " exceeds f_k(n) = " + std::to_string(top));
  if (l == 0) return make_algebra(cycle_quiver(n), k);
  if (l == top) return make_algebra(maximal_quiver(n), k);
  if (l == 1) {
    if (n < 2) throw DomainError("l = 1 needs n >= 2");
    return make_algebra(gamma_quiver(n, 2), k);
  }
  // Gamma^{l'+1} has radical-square-zero phidim l', and f_k(l') = l.
  const std::size_t lp = l % 2 == 0 ? k * (l - 2) / 2 + 2 : k * (l - 3) / 2 + 3;
  if (lp + 1 > n)
    throw DomainError("gamma size l'+1 = " + std::to_string(lp + 1) + " exceeds n = " + std::to_string(n));
  return make_algebra(gamma_quiver(n, lp + 1), k);
}

TruncatedAlgebra source_sink_maximal_example(std::size_t n, std::size_t m, std::size_t i0) {
  if (m < 3) throw DomainError("example needs m >= 3");
  if (n <= m) throw DomainError("example needs n > m");
  const std::size_t chain = n - m + 1;
  if (i0 <= 1 || i0 >= chain) throw DomainError("example needs 1 < i0 < n-m+1");

  const Quiver base = maximal_quiver(m);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
  // Chain vertex w_i (1-based) -> quiver index.
  std::vector<std::size_t> w_index(chain + 1);
  for (std::size_t i = 1; i <= chain; ++i) {
    if (i == i0) {
      w_index[i] = 0;
    } else {
      w_index[i] = names.size();
      names.push_back("w" + std::to_string(i));
    }
  }
  IntMatrix a(names.size(), names.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = base.arrows(i, j);
  for (std::size_t i = 1; i < chain; ++i) a(w_index[i], w_index[i + 1]) += 1;
  return make_algebra(Quiver(std::move(names), std::move(a)), n);
}

Family parse_family_name(const std::string& name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "gamma") return Family::Gamma;
  if (name == "afamily") return Family::AFamily;
  if (name == "s5") return Family::SourceSinkMaximal;
  throw DomainError("unknown family '" + name + "'");
}

TruncatedAlgebra build_family(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw DomainError(std::string("expected parameters ") + usage);
  };
  switch (spec.family) {
    case Family::Cycle:
      need(2, "n,k");
      return make_algebra(cycle_quiver(p[0]), p[1]);
    case Family::Gamma:
      need(3, "n,m,k");
      return make_algebra(gamma_quiver(p[0], p[1]), p[2]);
    case Family::AFamily:
      need(3, "n,k,l");
      return a_family(p[0], p[1], p[2]);
    case Family::SourceSinkMaximal:
      need(3, "n,m,i0");
      return source_sink_maximal_example(p[0], p[1], p[2]);
  }
  throw DomainError("unknown family");
}

}  // namespace phidim
