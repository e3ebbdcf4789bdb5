#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "syminv/matrix.hpp"
#include "syminv/mode.hpp"

namespace syminv {

// Exponent vector of a degree-k monomial in n variables.
using MultiIndex = std::vector<int>;

// Coefficient vector of a homogeneous k-form in the monomial basis.
using KForm = std::vector<Rat>;

long binom(int n, int k);

// All degree-k multi-indices over n variables in graded-lex order
// (lexicographically decreasing exponent vectors); length C(n+k-1, k).
std::vector<MultiIndex> monomial_basis(int n, int k);

enum class DualKind { star, flat };

std::string to_string(DualKind d);
DualKind dual_from_string(const std::string& s);

// A symbol at a point: the linear map S^k T* -> Hom(E, E^t) stored by its
// values on the graded-lex monomial basis. n = dim T, k = order,
// m = dim E; values[a] is the m x m coefficient form of the a-th monomial.
class SymbolTensor {
 public:
  SymbolTensor(int n, int k, int m, DualKind dual, std::vector<MatQ> values);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return m_; }
  long N() const { return long(values_.size()); }
  DualKind dual() const { return dual_; }
  const std::vector<MatQ>& values() const { return values_; }
  const MatQ& value(size_t a) const { return values_[a]; }

  friend bool operator==(const SymbolTensor& a, const SymbolTensor& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.m_ == b.m_ && a.dual_ == b.dual_ &&
           a.values_ == b.values_;
  }
  friend bool operator!=(const SymbolTensor& a, const SymbolTensor& b) { return !(a == b); }

 private:
  int n_, k_, m_;
  DualKind dual_;
  std::vector<MatQ> values_;
};

// sigma(q) = sum_a q[a] * values[a]: the bilinear form of sigma at q.
MatQ evaluate(const SymbolTensor& sigma, const KForm& q);

// N x N matrix P of the substitution x -> xM (row-vector convention):
// a degree-k coefficient vector c maps to P*c, and P(M1 M2) = P(M1) P(M2).
MatQ sym_power_matrix(const MatQ& m, int k);

// Coefficients of q(M x), i.e. the column-vector substitution; equals
// sym_power_matrix(M^t) * q.
KForm substitute(const MatQ& m, const KForm& q, int n, int k);

// Fiber action: every coefficient form b becomes A^{-t} b A^{-1}.
SymbolTensor act_gl_e(const MatQ& a, const SymbolTensor& sigma);

// Base action: precomposition of sigma with the symmetric power of M^t,
// re-expressed in the monomial basis; in flat mode every value picks up
// the induced det(M)^{-1} factor on volume forms.
SymbolTensor act_gl_t(const MatQ& m, const SymbolTensor& sigma);

// Deterministic small-integer test symbol. Entries are drawn in [-5, 5];
// self-adjoint symbols have symmetric coefficient forms, skew ones
// antisymmetric (even m required). Redraws until the special monomial
// tuple is admissible: in general mode every monomial form must be a
// non-degenerate bilinear form, otherwise the first form must be
// invertible. Throws GenerationFailed after the retry bound.
SymbolTensor random_symbol(int n, int k, int m, DualKind dual, Mode mode, std::uint64_t seed);

}  // namespace syminv
