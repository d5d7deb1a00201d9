#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hdeg/error.hpp"

namespace hdeg::cli {

/// Ideal expression.  Polynomial leaves keep their canonical text.
struct IdealExpr {
  enum class Kind { poly, list, name, intersect, power, product };
  Kind kind = Kind::list;
  std::string text;  // poly: polynomial, name: identifier
  int exponent = 0;  // power only
  std::vector<IdealExpr> args;

  friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct RingDecl {
  std::string name;
  std::uint32_t characteristic = 0;  // 0: QQ
  std::vector<std::string> vars;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name;
  std::string ring;
  IdealExpr expr;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct AlgebraDecl {
  std::string name;
  std::string ring;
  IdealExpr ideal;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

/// Rows are generators, columns relations, over `algebra`.
struct ModuleDecl {
  std::string name;
  std::string algebra;
  std::vector<std::vector<std::string>> matrix;
  std::vector<int> twists;  // empty: all generators in degree 0
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct ParamsDecl {
  std::string name;
  std::string ring;
  std::vector<std::string> gens;
  friend bool operator==(const ParamsDecl&, const ParamsDecl&) = default;
};

struct ExampleDecl {
  std::string family;  // "ex39" or "ex46"
  std::vector<std::pair<std::string, int>> args;
  friend bool operator==(const ExampleDecl&, const ExampleDecl&) = default;
};

struct CheckCmd {
  std::string what;  // thm1, thm2, invariants, audit
  friend bool operator==(const CheckCmd&, const CheckCmd&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, AlgebraDecl, ModuleDecl, ParamsDecl, ExampleDecl, CheckCmd>;

struct InputScript {
  std::vector<Statement> statements;

  std::size_t command_count() const;
  friend bool operator==(const InputScript&, const InputScript&) = default;
};

/// Syntax or semantic error with a 1-based source position.
class ScriptError : public InputError {
 public:
  ScriptError(int line, int column, const std::string& msg)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses and checks a script: names declared before use, polynomials
/// homogeneous and over the right ring, a module and parameters in scope
/// for every check.  Comments run from `#` or `//` to the end of the line.
InputScript parse_input(std::string_view text);

/// Canonical text; parse_input(print_script(s)) == s.
std::string print_script(const InputScript& s);
std::string print_expr(const IdealExpr& e);

}  // namespace hdeg::cli
