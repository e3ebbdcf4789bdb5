#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syminv/linalg.hpp"
#include "syminv/matrix.hpp"
#include "syminv/mode.hpp"
#include "syminv/symbols.hpp"

namespace syminv {

// ---------------------------------------------------------------------------
// Form-level operators
// ---------------------------------------------------------------------------

// S^b := b_s^{-1} b_a. Throws Singular when the symmetric part is.
MatQ s_operator(const MatQ& b);

// H^b := b^{-t} b. Cayley-related to S^b: S = (H+1)^{-1}(H-1).
MatQ h_operator(const MatQ& b);

// Adjoint of A with respect to an invertible bilinear form b:
// A_b = b^{-t} A^t b^t, the unique solution of b(Ax, y) = b(x, A_b y).
template <typename T>
Mat<T> b_adjoint(const Mat<T>& a, const Mat<T>& b) {
  const Mat<T> bt = b.transposed();
  return inverse(bt) * a.transposed() * bt;
}

// b is non-degenerate iff b and b_s are invertible and S^b has squarefree
// characteristic polynomial (simple spectrum over the closure).
bool is_nondegenerate_form(const MatQ& b);

// ---------------------------------------------------------------------------
// Operator tuples
// ---------------------------------------------------------------------------

// The tuple attached to evaluated forms (b_1, ..., b_N):
//   general:      form g = (b_1)_s, ops = [S^{b_1}, g^{-1}b_2, ..., g^{-1}b_N]
//   self-adjoint: form g = b_1,     ops = [g^{-1}b_2, ..., g^{-1}b_N]
//   skew:         form w = b_1,     ops = [w^{-1}b_2, ..., w^{-1}b_N]
// adj_ops caches the form-adjoint of each op; the form is symmetric
// (general, self-adjoint) or antisymmetric (skew), so adjointing is an
// involution and trace-word dedup below is sound.
template <typename T>
struct BasicOperatorTuple {
  Mode mode{};
  Mat<T> form;
  std::vector<Mat<T>> ops;
  std::vector<Mat<T>> adj_ops;
  std::vector<std::string> labels;
};

using OperatorTuple = BasicOperatorTuple<Rat>;

// Ungated tuple construction from already-evaluated forms. build_tuple
// applies the mode's admissibility gates first and then calls this; the
// float-mode Jacobian path calls it directly.
template <typename T>
BasicOperatorTuple<T> tuple_from_forms(Mode mode, std::span<const Mat<T>> forms) {
  BasicOperatorTuple<T> t;
  t.mode = mode;
  const Mat<T>& b1 = forms[0];
  size_t first_op_index = 2;
  if (mode == Mode::general) {
    const int m = b1.rows();
    Mat<T> bs(m, m), ba(m, m);
    const T half = T(1) / T(2);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        bs(i, j) = half * (b1(i, j) + b1(j, i));
        ba(i, j) = half * (b1(i, j) - b1(j, i));
      }
    t.form = bs;
    t.ops.push_back(inverse(bs) * ba);  // A_1 = S^{b_1}
    t.labels.push_back("A1");
  } else {
    t.form = b1;
  }
  const Mat<T> form_inv = inverse(t.form);
  for (size_t i = 1; i < forms.size(); ++i) {
    t.ops.push_back(form_inv * forms[i]);
    t.labels.push_back("A" + std::to_string(first_op_index + i - 1));
  }
  t.adj_ops.reserve(t.ops.size());
  for (const auto& op : t.ops) t.adj_ops.push_back(b_adjoint(op, t.form));
  return t;
}

// Gated construction from a symbol and k-forms. Preconditions per mode:
//   general:      every evaluated form non-degenerate (DegenerateForm)
//   self-adjoint: every form symmetric (ModeMismatch), first invertible
//   skew:         every form antisymmetric (ModeMismatch), first
//                 invertible, even m (OddDimension)
OperatorTuple build_tuple(const SymbolTensor& sigma, std::span<const KForm> qs, Mode mode);

// ---------------------------------------------------------------------------
// Trace words
// ---------------------------------------------------------------------------

// One letter of a trace word: operator index, plain or form-adjoint.
struct Letter {
  int op = 0;
  bool adj = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// (length, lexicographic) order; the enumeration order of fingerprints.
bool word_less(const Word& a, const Word& b);

// Lexicographically least word over the trace-symmetry orbit of w:
// cyclic rotations (tr XY = tr YX) and reversal with adjoint flags flipped
// on every letter (tr W = tr W_b for the reversed adjointed word).
Word canonical_word(const Word& w);

// All canonical words of length 1..cap over num_ops operators and their
// adjoints, in (length, lex) order. The Procesi generation bound for
// operators on an m-dimensional space is cap = 2^m - 1.
std::vector<Word> enumerate_words(int num_ops, int cap);

int procesi_word_bound(int m);
int default_cap(int m);  // min(2^m - 1, 6); the CLI default

// Trace of the word's operator product; adjoint letters use the cached
// form-adjoints, so in general mode the adjoint of A1 evaluates to -A1.
template <typename T>
T trace_word(const BasicOperatorTuple<T>& t, const Word& w) {
  if (w.empty()) throw IndexOutOfRangeError("trace_word: empty word");
  for (const Letter& l : w)
    if (l.op < 0 || size_t(l.op) >= t.ops.size())
      throw IndexOutOfRangeError("trace_word: operator index out of range");
  const auto& letter_matrix = [&](const Letter& l) -> const Mat<T>& {
    return l.adj ? t.adj_ops[size_t(l.op)] : t.ops[size_t(l.op)];
  };
  Mat<T> prod = letter_matrix(w[0]);
  for (size_t i = 1; i < w.size(); ++i) prod = prod * letter_matrix(w[i]);
  return prod.trace();
}

// Evaluates every word against a shared read-only tuple. The default entry
// point runs the OpenMP kernel; the serial variant is the reference the
// tests and the benchmark compare against. Results are identical.
template <typename T>
std::vector<T> trace_all(const BasicOperatorTuple<T>& t, std::span<const Word> words);
template <typename T>
std::vector<T> trace_all_serial(const BasicOperatorTuple<T>& t, std::span<const Word> words);

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

// Canonical map word -> trace plus the metadata needed to compare two
// fingerprints honestly (shape, cap, pivot choice, signature of g).
struct Fingerprint {
  std::vector<std::pair<Word, Rat>> entries;  // (length, lex) word order
  Mode mode{};
  int m = 0;
  long num_forms = 0;
  int cap = 0;
  int n = -1, k = -1;  // filled for symbol-level fingerprints
  std::optional<Signature> sig;
  std::string q1_choice;
  std::vector<std::string> warnings;
  bool star_pair = false;  // condition (*) holds for some A_i, A_j, i,j >= 2
  bool has_len3 = false;   // nonzero entry of word length >= 3

  bool entries_equal(const Fingerprint& o) const { return entries == o.entries; }
};

Fingerprint fingerprint(const OperatorTuple& t, int cap);
Fingerprint fingerprint_serial(const OperatorTuple& t, int cap);

struct TupleCompareInfo {
  bool reliable_a = false;  // condition (*) pair present in each tuple
  bool reliable_b = false;
  bool signatures_match = false;
  int cap = 0;
};

// Exact fingerprint equality (entries and signatures) at the given cap.
// Verdicts on tuples without a condition-(*) pair are flagged unreliable
// through the info struct.
bool tuples_equivalent(const OperatorTuple& a, const OperatorTuple& b, int cap,
                       TupleCompareInfo* info = nullptr);

// ---------------------------------------------------------------------------
// Special tuples and symbol-level equivalence
// ---------------------------------------------------------------------------

// The tuple of all degree-k monomial forms, with the pivot q1 chosen by
// the documented policy: monomials in graded-lex order first, then 20
// fixed-seed random small-integer combinations (these replace the last
// monomial to keep the tuple at N forms). Candidates failing the mode's
// gate, or whose tuple cannot be built, are skipped; exhaustion raises
// DegenerateSymbol.
struct SpecialTuple {
  std::vector<KForm> qs;
  std::vector<MatQ> forms;
  OperatorTuple tuple;
  std::string q1_choice;
};

SpecialTuple make_special_tuple(const SymbolTensor& sigma, Mode mode);

// Fingerprint of the special tuple: the invariants deciding
// GL(E)/Z2-equivalence of symbols evaluated on the monomial basis.
Fingerprint symbol_fingerprint(const SymbolTensor& sigma, Mode mode, int cap);

enum class Verdict { equivalent, not_equivalent, inconclusive };
std::string to_string(Verdict v);

struct EquivalenceReport {
  Verdict verdict = Verdict::inconclusive;
  int cap = 0;
  bool common_tuple = false;  // a q1 recipe admissible for both was found
  std::string q1_choice;
  bool entries_equal = false;
  bool signatures_match = false;
  bool star_gate_a = false, star_gate_b = false;  // condition (*) pair
  bool len3_gate_a = false, len3_gate_b = false;  // invariant of length >= 3
};

// Compares special-tuple fingerprints built from one shared q1 recipe.
// Equal fingerprints mean "equivalent"; unequal ones mean "not_equivalent"
// only when both symbols pass the full non-degeneracy gate (condition (*)
// pair and a nonzero invariant of word length >= 3), else "inconclusive".
Verdict symbols_equivalent(const SymbolTensor& a, const SymbolTensor& b, Mode mode, int cap,
                           EquivalenceReport* report = nullptr);

// ---------------------------------------------------------------------------
// Gate report (CLI `nondeg`)
// ---------------------------------------------------------------------------

struct FormGate {
  MultiIndex alpha;
  bool invertible = false;
  bool sym_part_invertible = false;  // general mode
  bool spectrum_simple = false;      // general mode
  bool symmetric = false;            // self-adjoint mode
  bool antisymmetric = false;        // skew mode
  bool passes = false;
};

struct NondegReport {
  Mode mode{};
  int n = 0, k = 0, m = 0;
  long num_forms = 0;
  int cap = 0;
  std::vector<FormGate> forms;
  bool tuple_built = false;
  std::string q1_choice;
  std::string failure;
  bool star_pair = false;
  bool has_len3 = false;
  bool non_degenerate = false;
};

NondegReport nondeg_report(const SymbolTensor& sigma, Mode mode, int cap);

// Applies the SYMINV_THREADS env var (0 or unset = automatic).
void configure_threads_from_env();

}  // namespace syminv
