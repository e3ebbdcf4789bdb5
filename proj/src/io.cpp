#include "syminv/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace syminv {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return f.get<int>();
}

std::string string_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

Rat rat_from_json(const json& v, const char* where) {
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw ParseError(std::string(where) + ": rational values must be \"p/q\" strings or integers");
}

json rat_to_json(const Rat& r) { return rat_to_string(r); }

}  // namespace

SymbolDocument parse_symbol(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("symbol document must be a JSON object");
  const int n = int_field(j, "n");
  const int k = int_field(j, "k");
  const int m = int_field(j, "m");
  if (n < 1 || k < 1 || m < 1) throw InvariantViolationError("n, k, m must be >= 1");
  const DualKind dual = dual_from_string(string_field(j, "dual"));
  const Mode mode = mode_from_string(string_field(j, "mode"));
  if (string_field(j, "field") != "rational")
    throw ParseError("unsupported field: '" + string_field(j, "field") + "'");

  const auto basis = monomial_basis(n, k);
  std::map<MultiIndex, size_t> pos;
  for (size_t b = 0; b < basis.size(); ++b) pos[basis[b]] = b;

  std::vector<MatQ> values(basis.size(), MatQ(m, m));
  std::vector<bool> seen(basis.size(), false);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  for (const json& e : entries) {
    const json& alpha_j = field(e, "alpha");
    if (!alpha_j.is_array()) throw ParseError("'alpha' must be an array");
    MultiIndex alpha;
    for (const json& x : alpha_j) {
      if (!x.is_number_integer()) throw ParseError("'alpha' entries must be integers");
      alpha.push_back(x.get<int>());
    }
    if (int(alpha.size()) != n)
      throw InvariantViolationError("alpha has wrong length (expected n entries)");
    int degree = 0;
    for (int x : alpha) {
      if (x < 0) throw InvariantViolationError("alpha exponents must be non-negative");
      degree += x;
    }
    if (degree != k) throw InvariantViolationError("alpha has degree != k");
    const auto it = pos.find(alpha);
    if (it == pos.end()) throw InvariantViolationError("alpha not in the monomial basis");
    if (seen[it->second]) throw InvariantViolationError("duplicate alpha");
    seen[it->second] = true;

    const json& rows = field(e, "matrix");
    if (!rows.is_array() || int(rows.size()) != m)
      throw InvariantViolationError("matrix must have m rows");
    MatQ b(m, m);
    for (int i = 0; i < m; ++i) {
      const json& row = rows[size_t(i)];
      if (!row.is_array() || int(row.size()) != m)
        throw InvariantViolationError("matrix must be square of side m");
      for (int c = 0; c < m; ++c) b(i, c) = rat_from_json(row[size_t(c)], "matrix");
    }
    values[it->second] = std::move(b);
  }
  return SymbolDocument{SymbolTensor(n, k, m, dual, std::move(values)), mode};
}

std::string serialize_symbol(const SymbolDocument& doc) {
  const SymbolTensor& s = doc.tensor;
  json j;
  j["n"] = s.n();
  j["k"] = s.k();
  j["m"] = s.m();
  j["dual"] = to_string(s.dual());
  j["mode"] = to_string(doc.mode);
  j["field"] = "rational";
  json entries = json::array();
  const auto basis = monomial_basis(s.n(), s.k());
  for (size_t a = 0; a < basis.size(); ++a) {
    json e;
    e["alpha"] = basis[a];
    json rows = json::array();
    for (int i = 0; i < s.m(); ++i) {
      json row = json::array();
      for (int c = 0; c < s.m(); ++c) row.push_back(rat_to_json(s.value(a)(i, c)));
      rows.push_back(std::move(row));
    }
    e["matrix"] = std::move(rows);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

Fingerprint parse_fingerprint(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("fingerprint document must be a JSON object");
  Fingerprint fp;
  fp.n = int_field(j, "n");
  fp.k = int_field(j, "k");
  fp.m = int_field(j, "m");
  fp.num_forms = int_field(j, "N");
  fp.mode = mode_from_string(string_field(j, "mode"));
  fp.cap = int_field(j, "cap");
  fp.q1_choice = string_field(j, "q1_choice");
  if (auto it = j.find("signature"); it != j.end()) {
    Signature sig;
    sig.pos = int_field(*it, "pos");
    sig.neg = int_field(*it, "neg");
    fp.sig = sig;
  }
  if (auto it = j.find("warnings"); it != j.end())
    for (const json& w : *it) fp.warnings.push_back(w.get<std::string>());
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  for (const json& e : entries) {
    const json& word_j = field(e, "word");
    if (!word_j.is_array()) throw ParseError("'word' must be an array");
    Word w;
    for (const json& l : word_j) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_boolean())
        throw ParseError("word letters must be [index, adjoint] pairs");
      w.push_back({l[0].get<int>(), l[1].get<bool>()});
    }
    const Rat value = rat_from_json(field(e, "value"), "entries");
    if (w.size() >= 3 && !(value == 0)) fp.has_len3 = true;
    fp.entries.emplace_back(std::move(w), value);
  }
  return fp;
}

std::string serialize_fingerprint(const Fingerprint& fp) {
  json j;
  j["n"] = fp.n;
  j["k"] = fp.k;
  j["m"] = fp.m;
  j["N"] = fp.num_forms;
  j["mode"] = to_string(fp.mode);
  j["cap"] = fp.cap;
  j["q1_choice"] = fp.q1_choice;
  if (fp.sig) j["signature"] = {{"pos", fp.sig->pos}, {"neg", fp.sig->neg}};
  if (!fp.warnings.empty()) j["warnings"] = fp.warnings;
  json entries = json::array();
  for (const auto& [word, value] : fp.entries) {
    json letters = json::array();
    for (const Letter& l : word) letters.push_back(json::array({l.op, l.adj}));
    json e;
    e["word"] = std::move(letters);
    e["value"] = rat_to_json(value);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace syminv
