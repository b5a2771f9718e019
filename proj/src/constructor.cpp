#include "phidim/constructor.hpp"

#include "phidim/homology.hpp"

namespace phidim {

ConstructionInput ConstructionInput::uniform(std::size_t n) {
  ConstructionInput in;
  in.n = n;
  in.v_n.assign(n, Rational(1));
  in.w_n.assign(n, n == 0 ? Rational(0) : Rational(1, static_cast<unsigned long>(n)));
  return in;
}

IntMatrix canonical_m_lambda(std::size_t n, std::size_t lambda) {
  if (n < 2) throw DomainError("M_lambda needs n >= 2, got " + std::to_string(n));
  if (lambda < 1) throw DomainError("M_lambda needs lambda >= 1");
  IntMatrix m(n, n);
  for (std::size_t i = 1; i + 1 < n; ++i) m(i, i - 1) = 1;
  m(n - 1, n - 1) = static_cast<unsigned long>(lambda);
  return m;
}

std::vector<RatVector> complete_perp_basis(const RatVector& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] != 0) nonzero.push_back(i);
  if (nonzero.empty()) throw DomainError("cannot complement the zero vector");

  std::vector<RatVector> basis;
  std::size_t next_nonzero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector u(n, Rational(0));
    if (w[i] == 0) {
      u[i] = 1;
    } else {
      ++next_nonzero;
      if (next_nonzero == nonzero.size()) continue;
      const std::size_t j = nonzero[next_nonzero];
      u[i] = 1;
      u[j] = -w[i] / w[j];
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer ceil_div(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer floor_div(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

RatMatrix conjugate(const RatMatrix& conj, const RatMatrix& inverse, const IntMatrix& m) {
  return mat_mul(mat_mul(conj, to_rational(m)), inverse);
}

}  // namespace

std::size_t choose_lambda(const RatMatrix& conj, bool strict) {
  if (!conj.square() || conj.rows() < 2) throw DomainError("conjugator must be square of size >= 2");
  const std::size_t n = conj.rows();
  const RatMatrix inverse = rat_inverse(conj);
  for (std::size_t i = 0; i < n; ++i) {
    if (conj(i, n - 1) <= 0) throw DomainError("last column of the conjugator must be strictly positive");
    if (inverse(n - 1, i) <= 0) throw DomainError("last row of the conjugator's inverse must be strictly positive");
  }
  // conj * M_lambda * conj^-1 = base + lambda * outer, outer > 0 entrywise.
  const RatMatrix base = conjugate(conj, inverse, canonical_m_lambda(n, 1));
  Integer lambda = 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational outer = conj(i, n - 1) * inverse(n - 1, j);
      const Rational nilpotent_part = base(i, j) - outer;
      const Rational ratio = -nilpotent_part / outer;
      const Integer need = strict ? floor_div(ratio) + 1 : ceil_div(ratio);
      if (need > lambda) lambda = need;
    }
  }
  if (!lambda.fits_ulong_p()) throw DomainError("lambda does not fit a machine word");
  return lambda.get_ui();
}

std::pair<Integer, IntMatrix> scale_to_integer(const RatMatrix& m) {
  Integer scale = 1;
  for (const auto& x : m.entries()) {
    if (x < 0) throw DomainError("scale_to_integer: negative entry " + x.get_str());
    scale = lcm(scale, Integer(x.get_den()));
  }
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = m(r, c) * scale;
      out(r, c) = scaled.get_num();
    }
  return {scale, out};
}

ConstructionReport construct_maximal(const ConstructionInput& input) {
  const std::size_t n = input.n;
  if (n < 2) throw DomainError("construction needs n >= 2");
  if (input.v_n.size() != n || input.w_n.size() != n) throw DomainError("v and w must have length n");
  for (std::size_t i = 0; i < n; ++i) {
    if (input.v_n[i] <= 0) throw DomainError("v must be strictly positive");
    if (input.w_n[i] <= 0) throw DomainError("w must be strictly positive");
  }
  if (dot(input.v_n, input.w_n) != 1) throw DomainError("<v, w> must equal 1");

  std::vector<RatVector> perp = input.perp_basis ? *input.perp_basis : complete_perp_basis(input.w_n);
  if (perp.size() != n - 1) throw DomainError("perp basis must have n-1 vectors");
  for (const auto& u : perp) {
    if (u.size() != n) throw DomainError("perp basis vector has the wrong length");
    if (dot(u, input.w_n) != 0) throw DomainError("perp basis vector is not orthogonal to w");
  }

  RatMatrix conj(n, n);
  for (std::size_t c = 0; c + 1 < n; ++c)
    for (std::size_t r = 0; r < n; ++r) conj(r, c) = perp[c][r];
  for (std::size_t r = 0; r < n; ++r) conj(r, n - 1) = input.v_n[r];
  if (rank(conj) != n) throw DomainError("perp basis does not span the complement of w");

  const std::size_t lambda = choose_lambda(conj, input.strict_positive);
  const RatMatrix conjugated = conjugate(conj, rat_inverse(conj), canonical_m_lambda(n, lambda));
  auto [scale, integral] = scale_to_integer(conjugated);

  ConstructionReport report{Quiver(std::move(integral)), lambda, scale, conj, 0};
  report.achieved_phidim = phi_dim(make_algebra(report.quiver, 2));
  if (report.achieved_phidim != n)
    throw InternalInconsistency("constructed quiver has phidim " + std::to_string(report.achieved_phidim) +
                                ", expected " + std::to_string(n));
  return report;
}

Quiver scale_preserves_maximal(const Quiver& q, const Integer& m) {
  if (m < 1) throw DomainError("scale factor must be at least 1");
  return Quiver(q.vertex_names(), scale(q.arrow_mult(), m));
}

}  // namespace phidim
