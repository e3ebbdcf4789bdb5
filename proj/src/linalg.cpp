#include "syminv/linalg.hpp"

#include <vector>

namespace syminv {

std::pair<MatQ, MatQ> split_parts(const MatQ& b) {
  b.require_square("split_parts");
  const int m = b.rows();
  MatQ s(m, m), a(m, m);
  const Rat half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      s(i, j) = half * (b(i, j) + b(j, i));
      a(i, j) = half * (b(i, j) - b(j, i));
    }
  return {s, a};
}

Poly charpoly(const MatQ& m) {
  m.require_square("charpoly");
  const int n = m.rows();
  std::vector<Rat> c(size_t(n) + 1, Rat(0));
  c[n] = 1;
  MatQ acc = m;
  for (int i = 1; i <= n; ++i) {
    c[size_t(n - i)] = -acc.trace() / Rat(i);
    if (i < n) {
      MatQ shifted = acc;
      for (int d = 0; d < n; ++d) shifted(d, d) += c[size_t(n - i)];
      acc = m * shifted;
    }
  }
  return Poly(std::move(c));
}

bool charpoly_is_squarefree(const MatQ& m) {
  const Poly p = charpoly(m);
  return poly_gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Expansion along the row of idx[0]:
//   Pf = sum_j (-1)^j a[i0][idx[j]] Pf(idx \ {i0, idx[j]})
Rat pfaffian_rec(const MatQ& m, std::vector<int>& idx) {
  if (idx.empty()) return Rat(1);
  Rat sum(0);
  const int i0 = idx[0];
  int sign = 1;
  for (size_t p = 1; p < idx.size(); ++p) {
    const int j = idx[p];
    if (!(m(i0, j) == 0)) {
      std::vector<int> rest;
      rest.reserve(idx.size() - 2);
      for (size_t q = 1; q < idx.size(); ++q)
        if (q != p) rest.push_back(idx[q]);
      sum += Rat(sign) * m(i0, j) * pfaffian_rec(m, rest);
    }
    sign = -sign;
  }
  return sum;
}

void require_skew_even(const MatQ& m, const char* op) {
  m.require_square(op);
  if (!m.is_antisymmetric()) throw NotSkewError(std::string(op) + ": matrix is not antisymmetric");
  if (m.rows() % 2 != 0) throw OddDimensionError(std::string(op) + ": odd dimension");
}

}  // namespace

Rat pfaffian(const MatQ& m) {
  require_skew_even(m, "pfaffian");
  std::vector<int> idx(size_t(m.rows()));
  for (int i = 0; i < m.rows(); ++i) idx[size_t(i)] = i;
  return pfaffian_rec(m, idx);
}

Poly pfaffian_pencil(const MatQ& omega, const MatQ& alpha) {
  require_skew_even(omega, "pfaffian_pencil");
  require_skew_even(alpha, "pfaffian_pencil");
  if (omega.rows() != alpha.rows())
    throw DimensionMismatchError("pfaffian_pencil: side mismatch");
  const int r = omega.rows() / 2;
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(size_t(r) + 1);
  for (int t = 0; t <= r; ++t) {
    const Rat lambda(t);
    pts.emplace_back(lambda, pfaffian(omega - lambda * alpha));
  }
  return interpolate(pts);
}

Signature signature(const MatQ& m) {
  m.require_square("signature");
  if (!m.is_symmetric()) throw NotSymmetricError("signature: matrix is not symmetric");
  MatQ w = m;
  std::vector<int> active(size_t(m.rows()));
  for (int i = 0; i < m.rows(); ++i) active[size_t(i)] = i;
  Signature sig;
  while (!active.empty()) {
    int pp = -1;
    for (int i : active)
      if (!(w(i, i) == 0)) { pp = i; break; }
    if (pp >= 0) {
      const Rat d = w(pp, pp);
      (d > 0 ? sig.pos : sig.neg)++;
      std::vector<int> rest;
      for (int i : active)
        if (i != pp) rest.push_back(i);
      for (int i : rest)
        for (int j : rest) w(i, j) -= w(i, pp) * w(pp, j) / d;
      active = std::move(rest);
      continue;
    }
    // All active diagonal entries vanish: take a hyperbolic plane.
    int hp = -1, hq = -1;
    for (size_t a = 0; a < active.size() && hp < 0; ++a)
      for (size_t b = a + 1; b < active.size(); ++b)
        if (!(w(active[a], active[b]) == 0)) {
          hp = active[a];
          hq = active[b];
          break;
        }
    if (hp < 0) throw SingularError("signature: form is singular");
    const Rat b = w(hp, hq);
    sig.pos++;
    sig.neg++;
    std::vector<int> rest;
    for (int i : active)
      if (i != hp && i != hq) rest.push_back(i);
    // Project the rest orthogonally to the plane <e_p, e_q>:
    // W'[i][j] = W[i][j] - W[j][q] W[i][p] / b - W[j][p] W[i][q] / b.
    MatQ next = w;
    for (int i : rest)
      for (int j : rest)
        next(i, j) = w(i, j) - w(j, hq) * w(i, hp) / b - w(j, hp) * w(i, hq) / b;
    w = std::move(next);
    active = std::move(rest);
  }
  return sig;
}

}  // namespace syminv
