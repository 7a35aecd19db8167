#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "primtower/arith/field_element.hpp"

namespace primtower {

/// Flat expression tree; children refer to indices into `nodes`.
struct AstNode {
  enum class Kind { kNumber, kSymbol, kNeg, kAdd, kSub, kMul, kDiv, kPow };
  Kind kind = Kind::kNumber;
  Integer number;
  std::string symbol;
  std::size_t position = 0;
  std::vector<int> children;
};

struct Ast {
  std::vector<AstNode> nodes;
  int root = -1;

  std::size_t size() const { return nodes.size(); }
};

/// Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' integer)?
///   atom  := integer | name | '(' expr ')'
Ast parse(const std::string& text);

using SymbolTable = std::function<std::optional<int>(const std::string&)>;

/// Throws UnknownSymbol for names the table does not resolve.
FieldElement evaluate(const Ast& ast, const SymbolTable& symbols);
FieldElement parse_element(const std::string& text, const SymbolTable& symbols);
SymbolTable symbol_table(const std::vector<std::string>& names);

enum class Format { kPlain, kJson, kLatex };

std::optional<Format> format_from_string(const std::string& name);

/// `names[v]` is the printed name of variable v. Terms are ordered
/// lex-descending, comparing exponents of the variables in `significance`
/// order (default: highest index first). Monomials list variables in
/// ascending index.
std::string render_poly(const MPoly& p, const std::vector<std::string>& names,
                        const std::vector<int>& significance = {});
std::string render(const FieldElement& f, const std::vector<std::string>& names,
                   Format format = Format::kPlain, const std::vector<int>& significance = {});

std::string latex_name(const std::string& name);
std::string json_quote(const std::string& s);

}  // namespace primtower
