#include "syminv/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <vector>

#include "syminv/linalg.hpp"
#include "syminv/procesi.hpp"

namespace syminv {

bool condition_star(const MatQ& ai, const MatQ& aj) {
  if (ai.rows() != aj.rows() || ai.cols() != aj.cols() || !ai.is_square())
    throw ShapeMismatchError("condition_star: operators must be square of equal side");
  if (!charpoly_is_squarefree(ai) || !charpoly_is_squarefree(aj)) return false;
  return !(ai * aj - aj * ai).is_zero();
}

bool doubled_spectrum_simple(const MatQ& a) {
  // Every irreducible factor must appear with exponent exactly 2, i.e.
  // gcd(p, p') equals the squarefree part p / gcd(p, p').
  const Poly p = charpoly(a);
  const Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return false;
  const auto [squarefree_part, rem] = poly_divmod(p, g);
  return rem.is_zero() && squarefree_part.monic() == g;
}

bool condition_star_symplectic(const MatQ& ai, const MatQ& aj) {
  if (ai.rows() != aj.rows() || ai.cols() != aj.cols() || !ai.is_square())
    throw ShapeMismatchError("condition_star_symplectic: operators must be square of equal side");
  if (!doubled_spectrum_simple(ai) || !doubled_spectrum_simple(aj)) return false;
  return !(ai * aj - aj * ai).is_zero();
}

int stabilizer_dimension(const MatQ& form, std::span<const MatQ> ops, GroupKind group) {
  form.require_square("stabilizer_dimension");
  const int m = form.rows();
  if (determinant(form) == 0)
    throw SingularError("stabilizer_dimension: form is singular");
  if (group == GroupKind::orthogonal && !form.is_symmetric())
    throw ShapeMismatchError("stabilizer_dimension: orthogonal group needs a symmetric form");
  if (group == GroupKind::symplectic && !form.is_antisymmetric())
    throw ShapeMismatchError("stabilizer_dimension: symplectic group needs an antisymmetric form");
  for (const auto& op : ops)
    if (op.rows() != m || op.cols() != m)
      throw ShapeMismatchError("stabilizer_dimension: operator side mismatch");

  // Unknowns C[p][q] -> column p*m + q.
  const int unknowns = m * m;
  MatQ sys(int(1 + ops.size()) * unknowns, unknowns);
  int row = 0;
  // (C^t F + F C)[i][j] = sum_p C[p][i] F[p][j] + sum_q F[i][q] C[q][j].
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j, ++row) {
      for (int p = 0; p < m; ++p) sys(row, p * m + i) += form(p, j);
      for (int q = 0; q < m; ++q) sys(row, q * m + j) += form(i, q);
    }
  // (C A - A C)[i][j] = sum_q C[i][q] A[q][j] - sum_p A[i][p] C[p][j].
  for (const auto& a : ops)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j, ++row) {
        for (int q = 0; q < m; ++q) sys(row, i * m + q) += a(q, j);
        for (int p = 0; p < m; ++p) sys(row, p * m + j) -= a(i, p);
      }
  return kernel_dimension(sys);
}

long expected_codimension(int n, int k, int m, Mode mode) {
  const long nf = binom(n + k - 1, k);
  const long m2 = long(m) * m;
  switch (mode) {
    case Mode::general:
      return (nf - 1) * m2;
    case Mode::self_adjoint:
      return nf * (long(m) * (m + 1) / 2) - m2;
    case Mode::skew:
      if (m % 2 != 0) throw OddDimensionError("expected_codimension: skew mode needs even m");
      return nf * (long(m) * (m - 1) / 2) - m2;
  }
  throw Error("expected_codimension: bad mode");
}

namespace {

// Independent coordinates of one form in the given mode.
std::vector<std::pair<int, int>> form_coordinates(int m, Mode mode) {
  std::vector<std::pair<int, int>> coords;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (mode == Mode::self_adjoint && j < i) continue;
      if (mode == Mode::skew && j <= i) continue;
      coords.emplace_back(i, j);
    }
  return coords;
}

void bump(MatD& form, int i, int j, double h, Mode mode) {
  form(i, j) += h;
  if (mode == Mode::self_adjoint && i != j) form(j, i) += h;
  if (mode == Mode::skew) form(j, i) -= h;
}

std::vector<double> traces_at(Mode mode, const std::vector<MatD>& forms,
                              std::span<const Word> words) {
  const auto tuple = tuple_from_forms<double>(mode, forms);
  return trace_all(tuple, words);
}

int rank_at_cap(Mode mode, const std::vector<MatD>& base, int num_ops, int cap, double step,
                double tol) {
  const std::vector<Word> words = enumerate_words(num_ops, cap);
  const auto coords = form_coordinates(int(base[0].rows()), mode);
  const size_t params = base.size() * coords.size();
  Eigen::MatrixXd jac(long(words.size()), long(params));
  for (size_t f = 0; f < base.size(); ++f)
    for (size_t c = 0; c < coords.size(); ++c) {
      std::vector<MatD> hi = base, lo = base;
      bump(hi[f], coords[c].first, coords[c].second, step, mode);
      bump(lo[f], coords[c].first, coords[c].second, -step, mode);
      const std::vector<double> fhi = traces_at(mode, hi, words);
      const std::vector<double> flo = traces_at(mode, lo, words);
      const long col = long(f * coords.size() + c);
      for (size_t w = 0; w < words.size(); ++w)
        jac(long(w), col) = (fhi[w] - flo[w]) / (2.0 * step);
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank;
}

}  // namespace

CodimReport jacobian_report(const SymbolTensor& sigma, Mode mode, int cap, double step,
                            double tol) {
  CodimReport rep;
  rep.mode = mode;
  rep.n = sigma.n();
  rep.k = sigma.k();
  rep.m = sigma.m();
  rep.num_forms = sigma.N();
  rep.expected_codim = expected_codimension(sigma.n(), sigma.k(), sigma.m(), mode);

  const SpecialTuple st = make_special_tuple(sigma, mode);
  {
    const Fingerprint fp = fingerprint(st.tuple, cap);
    if (!fp.star_pair || !fp.has_len3)
      throw DegenerateSymbolError("jacobian_report: symbol fails the non-degeneracy gate");
  }
  std::vector<MatD> base;
  base.reserve(st.forms.size());
  for (const auto& f : st.forms) {
    MatD d(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j) d(i, j) = rat_to_double(f(i, j));
    base.push_back(std::move(d));
  }
  const int num_ops = int(st.tuple.ops.size());

  int best_rank = -1;
  int used = cap;
  for (int c = cap; c <= cap + 2; ++c) {
    const int r = rank_at_cap(mode, base, num_ops, c, step, tol);
    if (r > best_rank) {
      best_rank = r;
      used = c;
    }
    if (best_rank >= rep.expected_codim) break;
  }
  rep.observed_rank = best_rank;
  rep.cap_used = used;
  return rep;
}

int jacobian_rank(const SymbolTensor& sigma, Mode mode, int cap, double step, double tol) {
  return *jacobian_report(sigma, mode, cap, step, tol).observed_rank;
}

bool check_witness(const SymbolTensor& s1, const SymbolTensor& s2, const MatQ& a1,
                   const MatQ& a2) {
  if (s1.n() != s2.n() || s1.k() != s2.k() || s1.m() != s2.m() || s1.dual() != s2.dual())
    throw ShapeMismatchError("check_witness: symbols have different shapes");
  if (a1.rows() != s1.n() || a1.cols() != s1.n())
    throw ShapeMismatchError("check_witness: base transform must be n x n");
  if (a2.rows() != s1.m() || a2.cols() != s1.m())
    throw ShapeMismatchError("check_witness: fiber transform must be m x m");
  return act_gl_e(a2, act_gl_t(a1, s1)) == s2;
}

}  // namespace syminv
