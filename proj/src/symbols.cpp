#include "syminv/symbols.hpp"

#include <map>
#include <random>

#include "syminv/procesi.hpp"

namespace syminv {

long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void fill_basis(int slots, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    fill_basis(slots - 1, remaining - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> monomial_basis(int n, int k) {
  if (n < 1 || k < 1) throw DimensionMismatchError("monomial_basis: need n >= 1, k >= 1");
  std::vector<MultiIndex> out;
  out.reserve(size_t(binom(n + k - 1, k)));
  MultiIndex cur;
  fill_basis(n, k, cur, out);
  return out;
}

std::string to_string(DualKind d) { return d == DualKind::star ? "star" : "flat"; }

DualKind dual_from_string(const std::string& s) {
  if (s == "star") return DualKind::star;
  if (s == "flat") return DualKind::flat;
  throw ParseError("unknown dual kind: '" + s + "'");
}

SymbolTensor::SymbolTensor(int n, int k, int m, DualKind dual, std::vector<MatQ> values)
    : n_(n), k_(k), m_(m), dual_(dual), values_(std::move(values)) {
  if (n < 1 || k < 1 || m < 1)
    throw DimensionMismatchError("SymbolTensor: need n, k, m >= 1");
  if (long(values_.size()) != binom(n + k - 1, k))
    throw DimensionMismatchError("SymbolTensor: wrong number of coefficient forms");
  for (const auto& v : values_)
    if (v.rows() != m || v.cols() != m)
      throw DimensionMismatchError("SymbolTensor: coefficient form is not m x m");
}

MatQ evaluate(const SymbolTensor& sigma, const KForm& q) {
  if (long(q.size()) != sigma.N())
    throw DimensionMismatchError("evaluate: k-form has wrong length");
  MatQ acc(sigma.m(), sigma.m());
  for (size_t a = 0; a < q.size(); ++a) {
    if (q[a] == 0) continue;
    acc = acc + q[a] * sigma.value(a);
  }
  return acc;
}

MatQ sym_power_matrix(const MatQ& m, int k) {
  m.require_square("sym_power_matrix");
  const int n = m.rows();
  const auto basis = monomial_basis(n, k);
  std::map<MultiIndex, size_t> pos;
  for (size_t b = 0; b < basis.size(); ++b) pos[basis[b]] = b;

  MatQ p(int(basis.size()), int(basis.size()));
  for (size_t a = 0; a < basis.size(); ++a) {
    // Expand prod_i (x M)_i^{alpha_i}; (xM)_i has coefficient M[j][i] on x_j.
    std::map<MultiIndex, Rat> poly{{MultiIndex(size_t(n), 0), Rat(1)}};
    for (int var = 0; var < n; ++var) {
      for (int rep = 0; rep < basis[a][size_t(var)]; ++rep) {
        std::map<MultiIndex, Rat> next;
        for (const auto& [mono, c] : poly)
          for (int j = 0; j < n; ++j) {
            if (m(j, var) == 0) continue;
            MultiIndex up = mono;
            up[size_t(j)] += 1;
            next[up] += c * m(j, var);
          }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, c] : poly) p(int(pos.at(mono)), int(a)) = c;
  }
  return p;
}

KForm substitute(const MatQ& m, const KForm& q, int n, int k) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatchError("substitute: matrix side must equal n");
  const MatQ p = sym_power_matrix(m.transposed(), k);
  if (long(q.size()) != long(p.rows()))
    throw DimensionMismatchError("substitute: k-form has wrong length");
  KForm out(q.size(), Rat(0));
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (!(p(i, j) == 0)) out[size_t(i)] += p(i, j) * q[size_t(j)];
  return out;
}

SymbolTensor act_gl_e(const MatQ& a, const SymbolTensor& sigma) {
  if (a.rows() != sigma.m() || a.cols() != sigma.m())
    throw DimensionMismatchError("act_gl_e: matrix side must equal m");
  const MatQ ainv = inverse(a);
  const MatQ ainv_t = ainv.transposed();
  std::vector<MatQ> values;
  values.reserve(sigma.values().size());
  for (const auto& b : sigma.values()) values.push_back(ainv_t * b * ainv);
  return SymbolTensor(sigma.n(), sigma.k(), sigma.m(), sigma.dual(), std::move(values));
}

SymbolTensor act_gl_t(const MatQ& m, const SymbolTensor& sigma) {
  if (m.rows() != sigma.n() || m.cols() != sigma.n())
    throw DimensionMismatchError("act_gl_t: matrix side must equal n");
  const Rat det = determinant(m);
  if (det == 0) throw SingularError("act_gl_t: base transform is singular");
  const MatQ p = sym_power_matrix(m.transposed(), sigma.k());
  const size_t nn = sigma.values().size();
  std::vector<MatQ> values(nn, MatQ(sigma.m(), sigma.m()));
  for (size_t a = 0; a < nn; ++a)
    for (size_t b = 0; b < nn; ++b) {
      const Rat& coef = p(int(b), int(a));
      if (!(coef == 0)) values[a] = values[a] + coef * sigma.value(b);
    }
  if (sigma.dual() == DualKind::flat) {
    const Rat f = Rat(1) / det;
    for (auto& v : values) v = f * v;
  }
  return SymbolTensor(sigma.n(), sigma.k(), sigma.m(), sigma.dual(), std::move(values));
}

namespace {

// Engine-independent draw in [-5, 5]; std::uniform_int_distribution is not
// portable across standard libraries.
int draw_entry(std::mt19937_64& eng) { return int(eng() % 11) - 5; }

MatQ draw_form(std::mt19937_64& eng, int m, Mode mode) {
  MatQ b(m, m);
  switch (mode) {
    case Mode::general:
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b(i, j) = draw_entry(eng);
      break;
    case Mode::self_adjoint:
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) b(i, j) = b(j, i) = draw_entry(eng);
      break;
    case Mode::skew:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const int v = draw_entry(eng);
          b(i, j) = v;
          b(j, i) = -v;
        }
      break;
  }
  return b;
}

}  // namespace

SymbolTensor random_symbol(int n, int k, int m, DualKind dual, Mode mode, std::uint64_t seed) {
  if (mode == Mode::skew && m % 2 != 0)
    throw OddDimensionError("random_symbol: skew mode needs even m");
  const long nforms = binom(n + k - 1, k);
  std::mt19937_64 eng(seed);
  constexpr int kMaxAttempts = 512;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<MatQ> values;
    values.reserve(size_t(nforms));
    for (long a = 0; a < nforms; ++a) values.push_back(draw_form(eng, m, mode));
    bool ok = true;
    if (mode == Mode::general) {
      for (const auto& b : values)
        if (!is_nondegenerate_form(b)) { ok = false; break; }
    } else {
      ok = !(determinant(values[0]) == 0);
    }
    if (ok) return SymbolTensor(n, k, m, dual, std::move(values));
  }
  throw GenerationFailedError("random_symbol: no admissible draw within retry bound");
}

}  // namespace syminv
