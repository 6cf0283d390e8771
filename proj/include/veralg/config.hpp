#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veralg/lie.hpp"

namespace veralg {

// Matrix entry as a coefficient tuple over F_p (length 1 for plain integers).
using EntryCoeffs = std::vector<long long>;

struct DatumConfig {
  std::string name;
  int p = 0;
  std::optional<std::vector<int>> ext_poly;  // low-to-high, monic
  std::vector<std::vector<EntryCoeffs>> matrix;
  std::vector<int> parity;
  std::optional<int> i;  // 1-based
  // Generator overrides for the semisimplification at a 1-based index: block name -> bracket word.
  std::map<int, std::map<std::string, std::string>> generators;
  std::map<std::string, std::string> meta;

  bool operator==(const DatumConfig&) const = default;
};

// Format, one item per line, '#' starts a comment:
//   name = a2
//   [field]      p = 7, ext_poly = 1 0 1
//   [datum]      row = 2 -1 (entries are integers or tuples like (0,1)), parity = 1 -1
//   [options]    i = 1
//   [generators 2]  M_{1^22} = [e1, [e2, e1]]
//   [meta]       free key = value pairs
// Throws ParseError (with line number) or ValidationError naming the field.
DatumConfig parse_config_text(const std::string& text);
DatumConfig parse_config(const std::string& path);
std::string serialize_config(const DatumConfig& c);

// Builds and validates the datum; p_override reduces the same entries modulo another prime.
ContragredientDatum to_datum(const DatumConfig& c, std::optional<int> p_override = std::nullopt);

// Evaluates a bracket word such as [e1, [e2, e1]] or f3 (1-based generator indices).
Vec eval_word(const GradedLieAlgebra& g, const std::string& word);

}  // namespace veralg
