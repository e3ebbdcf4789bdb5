#include <doctest.h>

#include "syminv/procesi.hpp"

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

}  // namespace

// The OpenMP kernel must reproduce the serial reference bit for bit: the
// word list is fixed up front and every slot is written independently.
TEST_CASE("trace_all: parallel kernel equals serial reference") {
  for (int seed = 0; seed < 6; ++seed) {
    const Mode mode = seed % 3 == 0   ? Mode::general
                      : seed % 3 == 1 ? Mode::self_adjoint
                                      : Mode::skew;
    const int m = mode == Mode::skew ? 4 : 3;
    const SymbolTensor s = random_symbol(2, 2, m, DualKind::star, mode, 7000 + seed);
    const OperatorTuple t = build_tuple(s, monomial_kforms(3), mode);
    const auto words = enumerate_words(int(t.ops.size()), 5);
    CHECK(trace_all(t, words) == trace_all_serial(t, words));

    const Fingerprint par = fingerprint(t, 5);
    const Fingerprint ser = fingerprint_serial(t, 5);
    CHECK(par.entries == ser.entries);
    CHECK(par.sig == ser.sig);
    CHECK(par.warnings == ser.warnings);
  }
}

TEST_CASE("trace_all: double kernel equals its serial reference") {
  const SymbolTensor s = random_symbol(2, 2, 3, DualKind::star, Mode::general, 7103);
  const OperatorTuple t = build_tuple(s, monomial_kforms(3), Mode::general);
  BasicOperatorTuple<double> td;
  td.mode = t.mode;
  auto to_d = [](const MatQ& q) {
    MatD d(q.rows(), q.cols());
    for (int i = 0; i < q.rows(); ++i)
      for (int j = 0; j < q.cols(); ++j) d(i, j) = rat_to_double(q(i, j));
    return d;
  };
  td.form = to_d(t.form);
  for (const auto& op : t.ops) td.ops.push_back(to_d(op));
  for (const auto& op : t.adj_ops) td.adj_ops.push_back(to_d(op));
  const auto words = enumerate_words(int(t.ops.size()), 4);
  CHECK(trace_all(td, words) == trace_all_serial(td, words));
}
