#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "syminv/procesi.hpp"
#include "syminv/verify.hpp"

using namespace syminv;

namespace {

std::vector<KForm> monomial_kforms(long nf) {
  std::vector<KForm> qs;
  for (long j = 0; j < nf; ++j) {
    KForm q(size_t(nf), Rat(0));
    q[size_t(j)] = 1;
    qs.push_back(std::move(q));
  }
  return qs;
}

// kernel dimension of the commutant equations alone (no form constraint)
int commutant_dimension(std::span<const MatQ> ops, int m) {
  MatQ sys(int(ops.size()) * m * m, m * m);
  int row = 0;
  for (const auto& a : ops)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j, ++row) {
        for (int q = 0; q < m; ++q) sys(row, i * m + q) += a(q, j);
        for (int p = 0; p < m; ++p) sys(row, p * m + j) -= a(i, p);
      }
  return kernel_dimension(sys);
}

}  // namespace

TEST_CASE("condition_star: named cases") {
  CHECK(condition_star(MatQ{{1, 0}, {0, 2}}, MatQ{{0, 1}, {1, 0}}));
  CHECK_FALSE(condition_star(MatQ{{1, 0}, {0, 2}}, MatQ{{1, 0}, {0, 2}}));  // commute
  CHECK_FALSE(condition_star(MatQ::identity(2), MatQ{{0, 1}, {1, 0}}));  // repeated eigenvalue
}

TEST_CASE("stabilizer_dimension: closed-form cases") {
  const std::vector<MatQ> no_ops;
  // so(2): antisymmetric 2x2 matrices
  CHECK(stabilizer_dimension(MatQ::identity(2), no_ops, GroupKind::orthogonal) == 1);
  // so(3)
  CHECK(stabilizer_dimension(MatQ::identity(3), no_ops, GroupKind::orthogonal) == 3);
  // sp(2) = sl(2)
  const MatQ j2{{0, 1}, {-1, 0}};
  CHECK(stabilizer_dimension(j2, no_ops, GroupKind::symplectic) == 3);

  const std::vector<MatQ> star_ops{MatQ{{1, 0}, {0, 2}}, MatQ{{0, 1}, {1, 0}}};
  CHECK(stabilizer_dimension(MatQ::identity(2), star_ops, GroupKind::orthogonal) == 0);

  // commuting diagonals: trivial orthogonal stabilizer but 2-dim commutant
  const std::vector<MatQ> diag_ops{MatQ{{1, 0}, {0, 2}}, MatQ{{3, 0}, {0, 4}}};
  CHECK(stabilizer_dimension(MatQ::identity(2), diag_ops, GroupKind::orthogonal) == 0);
  CHECK(commutant_dimension(diag_ops, 2) == 2);

  // commuting counterexamples with stabilizer >= 1
  const std::vector<MatQ> scalar_ops{MatQ::identity(2), Rat(2) * MatQ::identity(2)};
  CHECK(stabilizer_dimension(MatQ::identity(2), scalar_ops, GroupKind::orthogonal) == 1);
  const std::vector<MatQ> one_diag{MatQ{{1, 0}, {0, 2}}};
  CHECK(stabilizer_dimension(j2, one_diag, GroupKind::symplectic) == 1);

  CHECK_THROWS_AS(stabilizer_dimension(j2, no_ops, GroupKind::orthogonal), ShapeMismatchError);
  CHECK_THROWS_AS(stabilizer_dimension(MatQ::identity(2), no_ops, GroupKind::symplectic),
                  ShapeMismatchError);
  CHECK_THROWS_AS(stabilizer_dimension(MatQ{{1, 0}, {0, 0}}, no_ops, GroupKind::orthogonal),
                  SingularError);
}

TEST_CASE("stabilizer_dimension vanishes on condition-star tuples") {
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolTensor s = random_symbol(2, 2, 2, DualKind::star, Mode::general, 600 + trial);
    const OperatorTuple t = build_tuple(s, monomial_kforms(3), Mode::general);
    // the operators the theory indexes by i >= 2
    const std::vector<MatQ> ops(t.ops.begin() + 1, t.ops.end());
    if (!condition_star(ops[0], ops[1])) continue;
    CHECK(stabilizer_dimension(t.form, ops, GroupKind::orthogonal) == 0);
  }
  // random operator pairs meeting the literal condition (*) against a
  // symplectic form: the "scalar + symplectic => 0" argument
  std::mt19937_64 eng(58);
  int symplectic_hits = 0;
  for (int trial = 0; symplectic_hits < 10 && trial < 100; ++trial) {
    MatQ omega = oracles::rand_skew(eng, 4);
    if (determinant(omega) == 0) continue;
    const MatQ a = oracles::rand_mat(eng, 4);
    const MatQ b = oracles::rand_mat(eng, 4);
    if (!condition_star(a, b)) continue;
    ++symplectic_hits;
    const std::vector<MatQ> ops{a, b};
    CHECK(stabilizer_dimension(omega, ops, GroupKind::symplectic) == 0);
  }
  CHECK(symplectic_hits == 10);
}

// A pair of operators w^{-1}(skew) on a 4-dimensional space always keeps an
// sl(2)-sized symplectic stabilizer: in the eigenspace splitting of the
// first operator the second one has scalar diagonal blocks and scalar
// off-block products, so the two sl(2) block stabilizers get identified
// instead of killed. The orbit therefore has codimension 5, not 2.
TEST_CASE("skew pairs at m=4 keep a 3-dimensional symplectic stabilizer") {
  for (int trial = 0; trial < 5; ++trial) {
    const SymbolTensor s = random_symbol(2, 2, 4, DualKind::star, Mode::skew, 700 + trial);
    const OperatorTuple t = build_tuple(s, monomial_kforms(3), Mode::skew);
    REQUIRE(condition_star_symplectic(t.ops[0], t.ops[1]));
    CHECK(stabilizer_dimension(t.form, t.ops, GroupKind::symplectic) == 3);
  }
  // the finite-difference rank agrees: 18 parameters, orbit dim 16 - 3
  const SymbolTensor s = random_symbol(2, 2, 4, DualKind::star, Mode::skew, 731);
  CHECK(jacobian_rank(s, Mode::skew, 4) == 5);
}

TEST_CASE("skew-mode operators: doubled spectra, symplectic condition (*)") {
  for (int trial = 0; trial < 10; ++trial) {
    const SymbolTensor s = random_symbol(2, 2, 4, DualKind::star, Mode::skew, 750 + trial);
    const OperatorTuple t = build_tuple(s, monomial_kforms(3), Mode::skew);
    // charpoly of w^{-1}(skew) is a perfect square, never squarefree
    CHECK_FALSE(charpoly_is_squarefree(t.ops[0]));
    CHECK_FALSE(condition_star(t.ops[0], t.ops[1]));
    // and equals the square of the monic Pfaffian pencil Pf(alpha - l w)
    const MatQ alpha = t.form * t.ops[0];
    Poly pencil = pfaffian_pencil(alpha, t.form);
    pencil = (Rat(1) / pencil.leading()) * pencil;
    CHECK(charpoly(t.ops[0]) == pencil * pencil);
  }
  // doubled eigenvalues must also be distinct
  CHECK_FALSE(doubled_spectrum_simple(MatQ::identity(4)));
  CHECK(doubled_spectrum_simple(MatQ{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  CHECK_FALSE(doubled_spectrum_simple(MatQ{{1, 0}, {0, 2}}));  // squarefree, not doubled
}

TEST_CASE("expected_codimension: closed forms and mode identity") {
  CHECK(expected_codimension(2, 2, 2, Mode::general) == 8);
  CHECK(expected_codimension(2, 2, 2, Mode::self_adjoint) == 5);
  CHECK(expected_codimension(2, 2, 4, Mode::skew) == 2);

  for (int n : {2, 3})
    for (int k : {1, 2, 3})
      for (int m : {2, 4}) {
        const long nf = binom(n + k - 1, k);
        CHECK(expected_codimension(n, k, m, Mode::general) -
                  expected_codimension(n, k, m, Mode::self_adjoint) ==
              nf * (long(m) * (m - 1) / 2));
      }

  CHECK_THROWS_AS(expected_codimension(2, 2, 3, Mode::skew), OddDimensionError);
}

TEST_CASE("check_witness: identity, constructed transforms, mismatches") {
  std::mt19937_64 eng(51);
  const SymbolTensor s = random_symbol(2, 2, 2, DualKind::star, Mode::general, 52);
  CHECK(check_witness(s, s, MatQ::identity(2), MatQ::identity(2)));

  for (int trial = 0; trial < 50; ++trial) {
    const SymbolTensor x = random_symbol(2, 2, 2, DualKind::star, Mode::general, 800 + trial);
    const MatQ a1 = oracles::rand_invertible(eng, 2);
    const MatQ a2 = oracles::rand_invertible(eng, 2);
    const SymbolTensor y = act_gl_e(a2, act_gl_t(a1, x));
    CHECK(check_witness(x, y, a1, a2));
  }

  int rejected = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolTensor x = random_symbol(2, 2, 2, DualKind::star, Mode::general, 900 + trial);
    const SymbolTensor y = random_symbol(2, 2, 2, DualKind::star, Mode::general, 950 + trial);
    const MatQ a1 = oracles::rand_invertible(eng, 2);
    const MatQ a2 = oracles::rand_invertible(eng, 2);
    if (!check_witness(x, y, a1, a2)) ++rejected;
  }
  CHECK(rejected >= 19);

  const SymbolTensor flat = random_symbol(2, 2, 2, DualKind::flat, Mode::general, 53);
  CHECK_THROWS_AS(check_witness(s, flat, MatQ::identity(2), MatQ::identity(2)),
                  ShapeMismatchError);
}

TEST_CASE("jacobian_rank: general (2,2,2) counts eight independent invariants") {
  const SymbolTensor s = random_symbol(2, 2, 2, DualKind::star, Mode::general, 54);
  const CodimReport rep = jacobian_report(s, Mode::general, 3);
  CHECK(rep.expected_codim == 8);
  REQUIRE(rep.observed_rank.has_value());
  CHECK(*rep.observed_rank == 8);
}

TEST_CASE("jacobian_rank is stable under an exact GL(E) move") {
  std::mt19937_64 eng(55);
  const SymbolTensor s = random_symbol(2, 2, 2, DualKind::star, Mode::general, 56);
  const MatQ a = oracles::rand_invertible(eng, 2, -2, 2);
  CHECK(jacobian_rank(s, Mode::general, 3) == jacobian_rank(act_gl_e(a, s), Mode::general, 3));
}

TEST_CASE("simultaneous scaling of all forms is a null direction") {
  const SymbolTensor s = random_symbol(2, 2, 2, DualKind::star, Mode::general, 57);
  const SpecialTuple st = make_special_tuple(s, Mode::general);
  std::vector<MatD> base, scaled;
  for (const auto& f : st.forms) {
    MatD d(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j) d(i, j) = rat_to_double(f(i, j));
    base.push_back(d);
    const double eps = 1e-6;
    MatD ds = d;
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j) ds(i, j) *= (1.0 + eps);
    scaled.push_back(ds);
  }
  const auto words = enumerate_words(int(st.tuple.ops.size()), 3);
  const auto f0 = trace_all(tuple_from_forms<double>(Mode::general, base), words);
  const auto f1 = trace_all(tuple_from_forms<double>(Mode::general, scaled), words);
  double max_dir = 0;
  for (size_t i = 0; i < f0.size(); ++i)
    max_dir = std::max(max_dir, std::abs(f1[i] - f0[i]) / 1e-6);
  CHECK(max_dir < 1e-6);  // directional derivative ~ 0
}
