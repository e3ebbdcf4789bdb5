#include "syminv/procesi.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "syminv/verify.hpp"

namespace syminv {

MatQ s_operator(const MatQ& b) {
  auto [bs, ba] = split_parts(b);
  return inverse(bs) * ba;
}

MatQ h_operator(const MatQ& b) {
  return inverse(b.transposed()) * b;
}

bool is_nondegenerate_form(const MatQ& b) {
  if (determinant(b) == 0) return false;
  auto [bs, ba] = split_parts(b);
  if (determinant(bs) == 0) return false;
  return charpoly_is_squarefree(inverse(bs) * ba);
}

// ---------------------------------------------------------------------------
// Tuple construction
// ---------------------------------------------------------------------------

namespace {

OperatorTuple build_tuple_gated(std::span<const MatQ> forms, Mode mode) {
  if (forms.empty()) throw DimensionMismatchError("build_tuple: no k-forms given");
  const int m = forms[0].rows();
  switch (mode) {
    case Mode::general:
      for (size_t i = 0; i < forms.size(); ++i) {
        const std::string where = "q" + std::to_string(i + 1) + " form";
        if (determinant(forms[i]) == 0)
          throw DegenerateFormError("build_tuple: " + where + " is singular");
        auto [bs, ba] = split_parts(forms[i]);
        if (determinant(bs) == 0)
          throw DegenerateFormError("build_tuple: " + where + " has singular symmetric part");
        if (!charpoly_is_squarefree(inverse(bs) * ba))
          throw DegenerateFormError("build_tuple: " + where + ": S-spectrum not simple");
      }
      break;
    case Mode::self_adjoint:
      for (size_t i = 0; i < forms.size(); ++i)
        if (!forms[i].is_symmetric())
          throw ModeMismatchError("build_tuple: q" + std::to_string(i + 1) +
                                  " form is not symmetric");
      if (determinant(forms[0]) == 0)
        throw DegenerateFormError("build_tuple: q1 form is singular");
      break;
    case Mode::skew:
      if (m % 2 != 0) throw OddDimensionError("build_tuple: skew mode needs even m");
      for (size_t i = 0; i < forms.size(); ++i)
        if (!forms[i].is_antisymmetric())
          throw ModeMismatchError("build_tuple: q" + std::to_string(i + 1) +
                                  " form is not antisymmetric");
      if (determinant(forms[0]) == 0)
        throw DegenerateFormError("build_tuple: q1 form is singular");
      break;
  }
  return tuple_from_forms<Rat>(mode, forms);
}

}  // namespace

OperatorTuple build_tuple(const SymbolTensor& sigma, std::span<const KForm> qs, Mode mode) {
  std::vector<MatQ> forms;
  forms.reserve(qs.size());
  for (const auto& q : qs) forms.push_back(evaluate(sigma, q));
  return build_tuple_gated(forms, mode);
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word canonical_word(const Word& w) {
  Word flipped(w.rbegin(), w.rend());
  for (Letter& l : flipped) l.adj = !l.adj;
  Word best = w;
  Word rot = w;
  for (size_t variant = 0; variant < 2; ++variant) {
    for (size_t r = 0; r < w.size(); ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    rot = flipped;
    if (rot < best) best = rot;
  }
  return best;
}

std::vector<Word> enumerate_words(int num_ops, int cap) {
  if (cap < 1) throw DimensionMismatchError("enumerate_words: cap must be >= 1");
  std::vector<Word> out;
  if (num_ops <= 0) return out;
  std::vector<Letter> alphabet;
  for (int op = 0; op < num_ops; ++op) {
    alphabet.push_back({op, false});
    alphabet.push_back({op, true});
  }
  std::set<Word> canon;
  for (int len = 1; len <= cap; ++len) {
    std::vector<size_t> digits(size_t(len), 0);
    Word w(size_t(len), Letter{});
    while (true) {
      for (size_t i = 0; i < digits.size(); ++i) w[i] = alphabet[digits[i]];
      canon.insert(canonical_word(w));
      size_t pos = digits.size();
      while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  out.assign(canon.begin(), canon.end());
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

int procesi_word_bound(int m) {
  if (m < 1 || m > 20) throw DimensionMismatchError("procesi_word_bound: m out of range");
  return (1 << m) - 1;
}

int default_cap(int m) { return std::min(procesi_word_bound(m), 6); }

// ---------------------------------------------------------------------------
// Trace kernels
// ---------------------------------------------------------------------------

namespace {

template <typename T>
void validate_words(const BasicOperatorTuple<T>& t, std::span<const Word> words) {
  for (const Word& w : words) {
    if (w.empty()) throw IndexOutOfRangeError("trace_all: empty word");
    for (const Letter& l : w)
      if (l.op < 0 || size_t(l.op) >= t.ops.size())
        throw IndexOutOfRangeError("trace_all: operator index out of range");
  }
}

}  // namespace

template <typename T>
std::vector<T> trace_all_serial(const BasicOperatorTuple<T>& t, std::span<const Word> words) {
  validate_words(t, words);
  std::vector<T> out(words.size());
  for (size_t i = 0; i < words.size(); ++i) out[i] = trace_word(t, words[i]);
  return out;
}

template <typename T>
std::vector<T> trace_all(const BasicOperatorTuple<T>& t, std::span<const Word> words) {
  validate_words(t, words);
  std::vector<T> out(words.size());
  const long count = long(words.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long i = 0; i < count; ++i) out[size_t(i)] = trace_word(t, words[size_t(i)]);
  return out;
}

template std::vector<Rat> trace_all_serial<Rat>(const BasicOperatorTuple<Rat>&,
                                                std::span<const Word>);
template std::vector<Rat> trace_all<Rat>(const BasicOperatorTuple<Rat>&, std::span<const Word>);
template std::vector<double> trace_all_serial<double>(const BasicOperatorTuple<double>&,
                                                      std::span<const Word>);
template std::vector<double> trace_all<double>(const BasicOperatorTuple<double>&,
                                               std::span<const Word>);

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

namespace {

// Condition (*) is checked on the operators the theory indexes by i >= 2,
// i.e. excluding A1 (the S-operator slot) in general mode. Skew tuples use
// the symplectic reading: their operators have doubled spectra, so
// distinctness is asked of the Pfaffian-pencil roots.
bool has_star_pair(const OperatorTuple& t) {
  const size_t first = t.mode == Mode::general ? 1 : 0;
  for (size_t i = first; i < t.ops.size(); ++i)
    for (size_t j = i + 1; j < t.ops.size(); ++j) {
      const bool star = t.mode == Mode::skew ? condition_star_symplectic(t.ops[i], t.ops[j])
                                             : condition_star(t.ops[i], t.ops[j]);
      if (star) return true;
    }
  return false;
}

Fingerprint assemble(const OperatorTuple& t, int cap, bool parallel) {
  Fingerprint fp;
  fp.mode = t.mode;
  fp.m = t.form.rows();
  fp.cap = cap;
  fp.num_forms = long(t.ops.size()) + (t.mode == Mode::general ? 0 : 1);
  if (t.ops.empty()) {
    fp.warnings.push_back("empty fingerprint: tuple has no operators besides the pivot form");
  } else {
    const std::vector<Word> words = enumerate_words(int(t.ops.size()), cap);
    const std::vector<Rat> traces =
        parallel ? trace_all(t, words) : trace_all_serial(t, words);
    fp.entries.reserve(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
      fp.entries.emplace_back(words[i], traces[i]);
      if (words[i].size() >= 3 && !(traces[i] == 0)) fp.has_len3 = true;
    }
  }
  if (t.mode != Mode::skew) fp.sig = signature(t.form);
  fp.star_pair = has_star_pair(t);
  if ((t.mode == Mode::general && t.ops.size() < 3) ||
      (t.mode != Mode::general && t.ops.size() < 2))
    fp.warnings.push_back("condition (*) unattainable: fewer than two candidate operators");
  return fp;
}

}  // namespace

Fingerprint fingerprint(const OperatorTuple& t, int cap) { return assemble(t, cap, true); }

Fingerprint fingerprint_serial(const OperatorTuple& t, int cap) {
  return assemble(t, cap, false);
}

bool tuples_equivalent(const OperatorTuple& a, const OperatorTuple& b, int cap,
                       TupleCompareInfo* info) {
  if (a.mode != b.mode || a.form.rows() != b.form.rows() || a.ops.size() != b.ops.size())
    throw ShapeMismatchError("tuples_equivalent: tuples have different shapes");
  const Fingerprint fa = fingerprint(a, cap);
  const Fingerprint fb = fingerprint(b, cap);
  const bool sig_match = fa.sig == fb.sig;
  if (info) {
    info->reliable_a = fa.star_pair;
    info->reliable_b = fb.star_pair;
    info->signatures_match = sig_match;
    info->cap = cap;
  }
  return fa.entries_equal(fb) && sig_match;
}

// ---------------------------------------------------------------------------
// Special tuples
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kPivotSeed = 0x51c1a11d;
constexpr int kRandomPivots = 20;

struct PivotCandidate {
  KForm q1;
  std::string name;
  long monomial_index;  // -1 for a random pivot (which replaces the last monomial)
};

std::vector<PivotCandidate> pivot_candidates(long nforms) {
  std::vector<PivotCandidate> cands;
  for (long j = 0; j < nforms; ++j) {
    KForm q(size_t(nforms), Rat(0));
    q[size_t(j)] = 1;
    cands.push_back({std::move(q), "monomial:" + std::to_string(j), j});
  }
  for (int r = 0; r < kRandomPivots; ++r) {
    std::mt19937_64 eng(kPivotSeed + std::uint64_t(r));
    KForm q(size_t(nforms), Rat(0));
    for (auto& c : q) c = Rat(int(eng() % 11) - 5);
    cands.push_back({std::move(q), "random:" + std::to_string(r), -1});
  }
  return cands;
}

bool pivot_gate(const SymbolTensor& sigma, Mode mode, const KForm& q1) {
  const MatQ b = evaluate(sigma, q1);
  if (mode == Mode::general) return is_nondegenerate_form(b);
  return !(determinant(b) == 0);
}

std::vector<KForm> tuple_kforms(const PivotCandidate& cand, long nforms) {
  std::vector<KForm> qs;
  qs.push_back(cand.q1);
  for (long j = 0; j < nforms; ++j) {
    if (j == cand.monomial_index) continue;
    if (cand.monomial_index < 0 && j == nforms - 1) break;
    KForm q(size_t(nforms), Rat(0));
    q[size_t(j)] = 1;
    qs.push_back(std::move(q));
  }
  return qs;
}

std::optional<SpecialTuple> try_pivot(const SymbolTensor& sigma, Mode mode,
                                      const PivotCandidate& cand) {
  if (!pivot_gate(sigma, mode, cand.q1)) return std::nullopt;
  SpecialTuple st;
  st.qs = tuple_kforms(cand, sigma.N());
  st.q1_choice = cand.name;
  st.forms.reserve(st.qs.size());
  for (const auto& q : st.qs) st.forms.push_back(evaluate(sigma, q));
  try {
    st.tuple = build_tuple_gated(st.forms, mode);
  } catch (const DegenerateFormError&) {
    return std::nullopt;
  }
  return st;
}

}  // namespace

SpecialTuple make_special_tuple(const SymbolTensor& sigma, Mode mode) {
  for (const auto& cand : pivot_candidates(sigma.N()))
    if (auto st = try_pivot(sigma, mode, cand)) return std::move(*st);
  throw DegenerateSymbolError("make_special_tuple: no admissible q1 found");
}

Fingerprint symbol_fingerprint(const SymbolTensor& sigma, Mode mode, int cap) {
  const SpecialTuple st = make_special_tuple(sigma, mode);
  Fingerprint fp = fingerprint(st.tuple, cap);
  fp.n = sigma.n();
  fp.k = sigma.k();
  fp.num_forms = long(st.qs.size());
  fp.q1_choice = st.q1_choice;
  return fp;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::not_equivalent: return "not_equivalent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict symbols_equivalent(const SymbolTensor& a, const SymbolTensor& b, Mode mode, int cap,
                           EquivalenceReport* report) {
  if (a.n() != b.n() || a.k() != b.k() || a.m() != b.m() || a.dual() != b.dual())
    throw ShapeMismatchError("symbols_equivalent: symbols have different shapes");
  EquivalenceReport rep;
  rep.cap = cap;
  // Both fingerprints must come from the same tuple recipe, so scan the
  // shared candidate sequence for a pivot admissible for both symbols.
  std::optional<SpecialTuple> sa, sb;
  for (const auto& cand : pivot_candidates(a.N())) {
    sa = try_pivot(a, mode, cand);
    if (!sa) continue;
    sb = try_pivot(b, mode, cand);
    if (sb) break;
    sa.reset();
  }
  Verdict verdict = Verdict::inconclusive;
  if (sa && sb) {
    rep.common_tuple = true;
    rep.q1_choice = sa->q1_choice;
    Fingerprint fa = fingerprint(sa->tuple, cap);
    Fingerprint fb = fingerprint(sb->tuple, cap);
    rep.entries_equal = fa.entries_equal(fb);
    rep.signatures_match = fa.sig == fb.sig;
    rep.star_gate_a = fa.star_pair;
    rep.star_gate_b = fb.star_pair;
    rep.len3_gate_a = fa.has_len3;
    rep.len3_gate_b = fb.has_len3;
    if (rep.entries_equal && rep.signatures_match) {
      verdict = Verdict::equivalent;
    } else if (rep.star_gate_a && rep.len3_gate_a && rep.star_gate_b && rep.len3_gate_b) {
      verdict = Verdict::not_equivalent;
    }
  }
  rep.verdict = verdict;
  if (report) *report = rep;
  return verdict;
}

NondegReport nondeg_report(const SymbolTensor& sigma, Mode mode, int cap) {
  NondegReport rep;
  rep.mode = mode;
  rep.n = sigma.n();
  rep.k = sigma.k();
  rep.m = sigma.m();
  rep.num_forms = sigma.N();
  rep.cap = cap;
  const auto basis = monomial_basis(sigma.n(), sigma.k());
  for (size_t aidx = 0; aidx < basis.size(); ++aidx) {
    const MatQ& b = sigma.value(aidx);
    FormGate gate;
    gate.alpha = basis[aidx];
    gate.invertible = !(determinant(b) == 0);
    gate.symmetric = b.is_symmetric();
    gate.antisymmetric = b.is_antisymmetric();
    auto [bs, ba] = split_parts(b);
    gate.sym_part_invertible = !(determinant(bs) == 0);
    gate.spectrum_simple =
        gate.sym_part_invertible && charpoly_is_squarefree(inverse(bs) * ba);
    switch (mode) {
      case Mode::general:
        gate.passes = gate.invertible && gate.sym_part_invertible && gate.spectrum_simple;
        break;
      case Mode::self_adjoint:
        gate.passes = gate.symmetric && (aidx > 0 || gate.invertible);
        break;
      case Mode::skew:
        gate.passes = gate.antisymmetric && (aidx > 0 || gate.invertible);
        break;
    }
    rep.forms.push_back(std::move(gate));
  }
  try {
    const SpecialTuple st = make_special_tuple(sigma, mode);
    rep.tuple_built = true;
    rep.q1_choice = st.q1_choice;
    const Fingerprint fp = fingerprint(st.tuple, cap);
    rep.star_pair = fp.star_pair;
    rep.has_len3 = fp.has_len3;
  } catch (const Error& e) {
    rep.failure = e.what();
  }
  rep.non_degenerate = rep.tuple_built && rep.star_pair && rep.has_len3;
  return rep;
}

void configure_threads_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("SYMINV_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) omp_set_num_threads(v);
  }
#endif
}

}  // namespace syminv
