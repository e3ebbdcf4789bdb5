// Command-line front end: generation, evaluation, fingerprints, equivalence
// verdicts and the verification utilities, over exact rational symbol files.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syminv/io.hpp"
#include "syminv/linalg.hpp"
#include "syminv/procesi.hpp"
#include "syminv/symbols.hpp"
#include "syminv/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace syminv;

Rat rat_from_json_value(const json& v) {
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw ParseError("rational values must be \"p/q\" strings or integers");
}

MatQ matrix_literal(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid matrix literal: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError("matrix literal must be a non-empty array");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[size_t(i)].is_array() || int(j[size_t(i)].size()) != cols)
      throw ParseError("matrix literal rows must have equal length");
    for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json_value(j[size_t(i)][size_t(c)]);
  }
  return m;
}

KForm kform_literal(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid k-form literal: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("k-form literal must be an array");
  KForm q;
  for (const json& v : j) q.push_back(rat_from_json_value(v));
  return q;
}

json matrix_to_json(const MatQ& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

void emit_json(const std::string& out_path, const json& j) { emit(out_path, j.dump(2) + "\n"); }

int resolved_cap(int cap, int m) { return cap > 0 ? cap : default_cap(m); }

KForm unit_kform(long n_forms, long index) {
  KForm q(size_t(n_forms), Rat(0));
  q[size_t(index)] = 1;
  return q;
}

json nondeg_to_json(const NondegReport& rep) {
  json j;
  j["mode"] = to_string(rep.mode);
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["m"] = rep.m;
  j["N"] = rep.num_forms;
  j["cap"] = rep.cap;
  json forms = json::array();
  for (const auto& g : rep.forms) {
    json f;
    f["alpha"] = g.alpha;
    f["invertible"] = g.invertible;
    switch (rep.mode) {
      case Mode::general:
        f["sym_part_invertible"] = g.sym_part_invertible;
        f["s_spectrum_simple"] = g.spectrum_simple;
        break;
      case Mode::self_adjoint:
        f["symmetric"] = g.symmetric;
        break;
      case Mode::skew:
        f["antisymmetric"] = g.antisymmetric;
        break;
    }
    f["passes"] = g.passes;
    forms.push_back(std::move(f));
  }
  j["forms"] = std::move(forms);
  j["tuple_built"] = rep.tuple_built;
  if (rep.tuple_built)
    j["q1_choice"] = rep.q1_choice;
  else
    j["failure"] = rep.failure;
  j["condition_star_pair"] = rep.star_pair;
  j["length3_invariant"] = rep.has_len3;
  j["non_degenerate"] = rep.non_degenerate;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();

  CLI::App app{"symbol trace-invariant toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a deterministic random symbol");
  int g_n = 2, g_k = 2, g_m = 2;
  std::string g_mode = "general", g_dual = "star", g_out;
  std::uint64_t g_seed = 0;
  gen->add_option("--n", g_n, "base dimension");
  gen->add_option("--k", g_k, "operator order");
  gen->add_option("--m", g_m, "fiber dimension");
  gen->add_option("--mode", g_mode, "general | self-adjoint | skew");
  gen->add_option("--dual", g_dual, "star | flat");
  gen->add_option("--seed", g_seed, "RNG seed")->required();
  gen->add_option("-o,--out", g_out, "output file");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate the symbol at a k-form");
  std::string e_in, e_q, e_out;
  eval_cmd->add_option("--in", e_in, "symbol file")->required();
  eval_cmd->add_option("--q", e_q, "k-form coefficients, JSON array")->required();
  eval_cmd->add_option("-o,--out", e_out, "output file");

  // fingerprint
  auto* fp_cmd = app.add_subcommand("fingerprint", "special-tuple trace invariants");
  std::string f_in, f_out;
  int f_cap = -1;
  fp_cmd->add_option("--in", f_in, "symbol file")->required();
  fp_cmd->add_option("--cap", f_cap, "word length cap (default min(2^m-1, 6))");
  fp_cmd->add_option("-o,--out", f_out, "output file");

  // compare
  auto* cmp = app.add_subcommand("compare", "decide equivalence of two symbols");
  std::string c_a, c_b, c_out;
  int c_cap = -1;
  cmp->add_option("a", c_a, "first symbol file")->required();
  cmp->add_option("b", c_b, "second symbol file")->required();
  cmp->add_option("--cap", c_cap, "word length cap");
  cmp->add_option("-o,--out", c_out, "output file");

  // transform
  auto* tr = app.add_subcommand("transform", "apply group elements to a symbol");
  std::string t_in, t_gl_t, t_gl_e, t_out;
  tr->add_option("--in", t_in, "symbol file")->required();
  tr->add_option("--gl-t", t_gl_t, "n x n matrix literal (base action, applied first)");
  tr->add_option("--gl-e", t_gl_e, "m x m matrix literal (fiber action)");
  tr->add_option("-o,--out", t_out, "output file");

  // nondeg
  auto* nd = app.add_subcommand("nondeg", "non-degeneracy gate report");
  std::string n_in, n_out;
  int n_cap = -1;
  nd->add_option("--in", n_in, "symbol file")->required();
  nd->add_option("--cap", n_cap, "word length cap");
  nd->add_option("-o,--out", n_out, "output file");

  // signature
  auto* sig_cmd = app.add_subcommand("signature", "inertia of the pivot symmetric form");
  std::string s_in, s_q, s_out;
  sig_cmd->add_option("--in", s_in, "symbol file")->required();
  sig_cmd->add_option("--q", s_q, "k-form literal (default: pivot policy)");
  sig_cmd->add_option("-o,--out", s_out, "output file");

  // pfaffian
  auto* pf_cmd = app.add_subcommand("pfaffian", "Pfaffian of an evaluated skew form");
  std::string p_in, p_q, p_out;
  bool p_q1 = false;
  pf_cmd->add_option("--in", p_in, "symbol file")->required();
  pf_cmd->add_option("--q", p_q, "k-form literal");
  pf_cmd->add_flag("--q1", p_q1, "use the first monomial (default)");
  pf_cmd->add_option("-o,--out", p_out, "output file");

  // pencil
  auto* pc_cmd = app.add_subcommand("pencil", "Pfaffian pencil Pf(sigma_qi - lambda sigma_qj)");
  std::string pc_in, pc_out;
  long pc_i = 0, pc_j = 1;
  pc_cmd->add_option("--in", pc_in, "symbol file")->required();
  pc_cmd->add_option("--i", pc_i, "monomial index of omega (default 0)");
  pc_cmd->add_option("--j", pc_j, "monomial index of alpha (default 1)");
  pc_cmd->add_option("-o,--out", pc_out, "output file");

  // stabilizer
  auto* st_cmd = app.add_subcommand("stabilizer", "Lie-algebra stabilizer dimension");
  std::string st_in, st_out;
  st_cmd->add_option("--in", st_in, "symbol file")->required();
  st_cmd->add_option("-o,--out", st_out, "output file");

  // rank
  auto* rk_cmd = app.add_subcommand("rank", "numeric Jacobian rank of the fingerprint map");
  std::string r_in, r_out;
  int r_cap = -1;
  double r_step = 1e-6, r_tol = 1e-6;
  rk_cmd->add_option("--in", r_in, "symbol file")->required();
  rk_cmd->add_option("--cap", r_cap, "word length cap");
  rk_cmd->add_option("--step", r_step, "central difference step");
  rk_cmd->add_option("--tol", r_tol, "singular value ratio tolerance");
  rk_cmd->add_option("-o,--out", r_out, "output file");

  // witness
  auto* w_cmd = app.add_subcommand("witness", "check a claimed equivalence witness");
  std::string w_a, w_b, w_gl_t, w_gl_e, w_out;
  w_cmd->add_option("--a", w_a, "first symbol file")->required();
  w_cmd->add_option("--b", w_b, "second symbol file")->required();
  w_cmd->add_option("--gl-t", w_gl_t, "n x n matrix literal")->required();
  w_cmd->add_option("--gl-e", w_gl_e, "m x m matrix literal")->required();
  w_cmd->add_option("-o,--out", w_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(gen)) {
      const Mode mode = mode_from_string(g_mode);
      const DualKind dual = dual_from_string(g_dual);
      const SymbolTensor s = random_symbol(g_n, g_k, g_m, dual, mode, g_seed);
      emit(g_out, serialize_symbol({s, mode}));
      return 0;
    }
    if (app.got_subcommand(eval_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(e_in));
      const MatQ b = evaluate(doc.tensor, kform_literal(e_q));
      json j;
      j["matrix"] = matrix_to_json(b);
      emit_json(e_out, j);
      return 0;
    }
    if (app.got_subcommand(fp_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(f_in));
      const int cap = resolved_cap(f_cap, doc.tensor.m());
      emit(f_out, serialize_fingerprint(symbol_fingerprint(doc.tensor, doc.mode, cap)));
      return 0;
    }
    if (app.got_subcommand(cmp)) {
      const SymbolDocument da = parse_symbol(read_file(c_a));
      const SymbolDocument db = parse_symbol(read_file(c_b));
      if (da.mode != db.mode)
        throw ShapeMismatchError("compare: the two files declare different modes");
      const int cap = resolved_cap(c_cap, da.tensor.m());
      EquivalenceReport rep;
      const Verdict verdict = symbols_equivalent(da.tensor, db.tensor, da.mode, cap, &rep);
      json j;
      j["verdict"] = to_string(verdict);
      j["cap"] = rep.cap;
      j["common_tuple"] = rep.common_tuple;
      if (rep.common_tuple) {
        j["q1_choice"] = rep.q1_choice;
        j["entries_equal"] = rep.entries_equal;
        j["signatures_match"] = rep.signatures_match;
        j["gates"] = {{"a", {{"condition_star", rep.star_gate_a}, {"length3", rep.len3_gate_a}}},
                      {"b", {{"condition_star", rep.star_gate_b}, {"length3", rep.len3_gate_b}}}};
      }
      emit_json(c_out, j);
      switch (verdict) {
        case Verdict::equivalent: return 0;
        case Verdict::not_equivalent: return 1;
        case Verdict::inconclusive: return 3;
      }
    }
    if (app.got_subcommand(tr)) {
      if (t_gl_t.empty() && t_gl_e.empty())
        throw ParseError("transform: need --gl-t and/or --gl-e");
      SymbolDocument doc = parse_symbol(read_file(t_in));
      SymbolTensor s = doc.tensor;
      if (!t_gl_t.empty()) s = act_gl_t(matrix_literal(t_gl_t), s);
      if (!t_gl_e.empty()) s = act_gl_e(matrix_literal(t_gl_e), s);
      emit(t_out, serialize_symbol({s, doc.mode}));
      return 0;
    }
    if (app.got_subcommand(nd)) {
      const SymbolDocument doc = parse_symbol(read_file(n_in));
      const int cap = resolved_cap(n_cap, doc.tensor.m());
      const NondegReport rep = nondeg_report(doc.tensor, doc.mode, cap);
      emit_json(n_out, nondeg_to_json(rep));
      return rep.non_degenerate ? 0 : 1;
    }
    if (app.got_subcommand(sig_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(s_in));
      if (doc.mode == Mode::skew)
        throw ModeMismatchError("signature: skew forms carry no signature invariant");
      MatQ form;
      json j;
      if (!s_q.empty()) {
        form = evaluate(doc.tensor, kform_literal(s_q));
        j["q1_choice"] = "explicit";
      } else {
        const SpecialTuple st = make_special_tuple(doc.tensor, doc.mode);
        form = st.tuple.form;
        j["q1_choice"] = st.q1_choice;
      }
      const Signature sig = signature(split_parts(form).first);
      j["signature"] = {{"pos", sig.pos}, {"neg", sig.neg}};
      emit_json(s_out, j);
      return 0;
    }
    if (app.got_subcommand(pf_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(p_in));
      const KForm q = p_q.empty() ? unit_kform(doc.tensor.N(), 0) : kform_literal(p_q);
      const Rat pf = pfaffian(evaluate(doc.tensor, q));
      json j;
      j["pfaffian"] = rat_to_string(pf);
      emit_json(p_out, j);
      return 0;
    }
    if (app.got_subcommand(pc_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(pc_in));
      if (pc_i < 0 || pc_i >= doc.tensor.N() || pc_j < 0 || pc_j >= doc.tensor.N())
        throw IndexOutOfRangeError("pencil: monomial index out of range");
      const MatQ omega = doc.tensor.value(size_t(pc_i));
      const MatQ alpha = doc.tensor.value(size_t(pc_j));
      const Poly p = pfaffian_pencil(omega, alpha);
      json coeffs = json::array();
      for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
      json j;
      j["i"] = pc_i;
      j["j"] = pc_j;
      j["coeffs"] = std::move(coeffs);
      emit_json(pc_out, j);
      return 0;
    }
    if (app.got_subcommand(st_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(st_in));
      const SpecialTuple st = make_special_tuple(doc.tensor, doc.mode);
      const GroupKind group =
          doc.mode == Mode::skew ? GroupKind::symplectic : GroupKind::orthogonal;
      const int dim = stabilizer_dimension(st.tuple.form, st.tuple.ops, group);
      json j;
      j["group"] = doc.mode == Mode::skew ? "symplectic" : "orthogonal";
      j["q1_choice"] = st.q1_choice;
      j["dimension"] = dim;
      emit_json(st_out, j);
      return 0;
    }
    if (app.got_subcommand(rk_cmd)) {
      const SymbolDocument doc = parse_symbol(read_file(r_in));
      const int cap = resolved_cap(r_cap, doc.tensor.m());
      const CodimReport rep = jacobian_report(doc.tensor, doc.mode, cap, r_step, r_tol);
      json j;
      j["mode"] = to_string(rep.mode);
      j["n"] = rep.n;
      j["k"] = rep.k;
      j["m"] = rep.m;
      j["N"] = rep.num_forms;
      j["expected_codim"] = rep.expected_codim;
      j["observed_rank"] = *rep.observed_rank;
      j["cap_used"] = rep.cap_used;
      emit_json(r_out, j);
      return 0;
    }
    if (app.got_subcommand(w_cmd)) {
      const SymbolDocument da = parse_symbol(read_file(w_a));
      const SymbolDocument db = parse_symbol(read_file(w_b));
      const bool ok =
          check_witness(da.tensor, db.tensor, matrix_literal(w_gl_t), matrix_literal(w_gl_e));
      json j;
      j["witness"] = ok;
      emit_json(w_out, j);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
