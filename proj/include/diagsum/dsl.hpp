#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagsum/substitution.hpp"

namespace diagsum {

// Parse failure with the 1-based line it was detected on (0 for
// document-level problems such as a missing start letter).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses the line-oriented system description:
//
//   system <name>
//   alphabet <g0> <g1> ...          (optional; inferred from rules)
//   rule <g> -> <g> <g> ...
//   code <g> -> <0|1>               (optional; identity for <=2 letters)
//   start <g>
//   index_base <0|1>                (optional; defaults to 0)
//
// '#' starts a comment. A document consisting of just "system <name>" with a
// built-in name (fibonacci, thue_morse, von_neumann, squares) resolves to
// that built-in system.
MorphicSystem parse_system(const std::string& text);

// Canonical document for a system; parse_system(emit_system(s)) == s.
std::string emit_system(const MorphicSystem& s);

std::optional<MorphicSystem> builtin_system(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace diagsum
