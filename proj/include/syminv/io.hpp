#pragma once

#include <string>

#include "syminv/mode.hpp"
#include "syminv/procesi.hpp"
#include "syminv/symbols.hpp"

namespace syminv {

// A symbol file couples the tensor with the symmetry mode it is meant to
// be classified under. UTF-8 JSON; rationals travel as exact "p/q" strings.
struct SymbolDocument {
  SymbolTensor tensor;
  Mode mode = Mode::general;
};

// Throws ParseError for malformed documents and InvariantViolation for
// well-formed ones violating the schema (degree mismatch, duplicate alpha,
// wrong matrix shape). Missing alphas denote zero matrices.
SymbolDocument parse_symbol(const std::string& text);
std::string serialize_symbol(const SymbolDocument& doc);

Fingerprint parse_fingerprint(const std::string& text);
std::string serialize_fingerprint(const Fingerprint& fp);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace syminv
