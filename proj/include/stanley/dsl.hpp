// The ideal-definition DSL:
//   input  := family | explicit
//   family := "kpartite" int+
//           | "hyperbipartite" "V1=" int "V2=" int "s=" int
//           | family "extend" "p=" int
//   explicit := "ideal" "n=" int ":" gen ("," gen)*
//   gen    := var ("*" var)* ;  var := "x" int
// Whitespace is insignificant, indices are 1-based, duplicate variables in a
// generator are rejected.
#pragma once

#include <optional>
#include <string>

#include "stanley/families.hpp"

namespace stanley {

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, int line, int column)
      : ValidationError("parse error at " + std::to_string(line) + ":" +
                        std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Keeps the family structure so bound evaluation can dispatch on it; exactly
// one of the three sources is set.
struct ParsedInput {
  std::optional<KPartiteSpec> kpartite;
  std::optional<HypergraphSpec> hypergraph;
  std::optional<SqfreeIdeal> explicit_ideal;
  bool extended = false;
  int extend_p = 0;  // total across chained "extend" clauses

  SqfreeIdeal base_ideal() const;
  SqfreeIdeal build() const;   // base with the extension applied
  std::string describe() const;
};

ParsedInput parse_ideal_dsl(const std::string& text);

}  // namespace stanley
