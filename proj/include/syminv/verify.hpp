#pragma once

#include <optional>
#include <span>

#include "syminv/matrix.hpp"
#include "syminv/mode.hpp"
#include "syminv/symbols.hpp"

namespace syminv {

// Condition (*): both operators have squarefree characteristic polynomials
// and they do not commute. Forces a trivial connected stabilizer.
bool condition_star(const MatQ& ai, const MatQ& aj);

// An operator of the form w^{-1}a (w, a antisymmetric) acts as a scalar on
// 2-dimensional eigenspaces, so its characteristic polynomial is a perfect
// square and can never be squarefree. "Distinct eigenvalues" then means
// distinct Pfaffian-pencil roots: charpoly = (squarefree)^2.
bool doubled_spectrum_simple(const MatQ& a);

// The symplectic reading of condition (*): distinct pencil roots for both
// operators and a nonzero commutator.
bool condition_star_symplectic(const MatQ& ai, const MatQ& aj);

enum class GroupKind { orthogonal, symplectic };

// Dimension of the Lie-algebra stabilizer
//   { C : C^t form + form C = 0,  [C, A_i] = 0 for all i },
// computed as the exact kernel dimension of the stacked linear system in
// the m^2 entries of C. The form must be symmetric for the orthogonal
// group and antisymmetric for the symplectic one.
int stabilizer_dimension(const MatQ& form, std::span<const MatQ> ops, GroupKind group);

// Closed-form codimension of a regular orbit (equivalently the
// transcendence degree of the invariant field) for N = C(n+k-1, k):
//   general       (N-1) m^2
//   self-adjoint  N m(m+1)/2 - m^2
//   skew          N m(m-1)/2 - m^2
long expected_codimension(int n, int k, int m, Mode mode);

struct CodimReport {
  Mode mode{};
  int n = 0, k = 0, m = 0;
  long num_forms = 0;
  long expected_codim = 0;
  std::optional<int> observed_rank;
  int cap_used = 0;
};

// Numerical rank of the finite-difference Jacobian of the fingerprint
// entries with respect to the independent coefficient entries of the
// special tuple's forms (all m^2 per form in general mode, upper triangle
// in self-adjoint, strict upper triangle in skew). Central differences at
// the given step; rank counts singular values above tol * largest. This is
// the library's only float-mode computation. If the rank falls short of
// the expected codimension the probe retries at cap+1 and cap+2.
int jacobian_rank(const SymbolTensor& sigma, Mode mode, int cap, double step = 1e-6,
                  double tol = 1e-6);

CodimReport jacobian_report(const SymbolTensor& sigma, Mode mode, int cap, double step = 1e-6,
                            double tol = 1e-6);

// True iff act_gl_e(A2, act_gl_t(A1, s1)) equals s2 exactly.
bool check_witness(const SymbolTensor& s1, const SymbolTensor& s2, const MatQ& a1,
                   const MatQ& a2);

}  // namespace syminv
