#pragma once

#include <utility>

#include "syminv/matrix.hpp"
#include "syminv/polynomial.hpp"

namespace syminv {

// Symmetric / antisymmetric parts: b = b_s + b_a with b_s = (b+b^t)/2,
// b_a = (b-b^t)/2.
std::pair<MatQ, MatQ> split_parts(const MatQ& b);

// Characteristic polynomial det(lambda*I - M), monic, via Faddeev-LeVerrier.
Poly charpoly(const MatQ& m);

// True iff gcd(p, p') is a nonzero constant for p = charpoly(M), i.e. all
// eigenvalues are distinct over the algebraic closure.
bool charpoly_is_squarefree(const MatQ& m);

// Pfaffian of an antisymmetric matrix of even side; Pf(M)^2 = det(M).
// Recursive expansion along the first row, exact.
Rat pfaffian(const MatQ& m);

// Pf(omega - lambda*alpha) as a polynomial in lambda of degree <= side/2.
// Computed by exact evaluation at side/2 + 1 rational nodes and Lagrange
// interpolation; agrees with pointwise pfaffian evaluation.
Poly pfaffian_pencil(const MatQ& omega, const MatQ& alpha);

struct Signature {
  int pos = 0;
  int neg = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Inertia of an invertible symmetric form over Q, by exact congruence
// diagonalization (Lagrange reduction; a zero diagonal pivot on a
// nonsingular block takes the hyperbolic 2x2 step contributing (1,1)).
Signature signature(const MatQ& m);

}  // namespace syminv
