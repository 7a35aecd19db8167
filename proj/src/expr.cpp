#include "primtower/expr.hpp"

#include <algorithm>
#include <cctype>
#include "json.hpp"

#include "primtower/errors.hpp"

namespace primtower {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Ast run() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "empty expression");
    ast_.root = expr();
    skip_space();
    if (pos_ < text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return std::move(ast_);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int add(AstNode node) {
    ast_.nodes.push_back(std::move(node));
    return static_cast<int>(ast_.nodes.size()) - 1;
  }

  int binary(AstNode::Kind kind, std::size_t position, int lhs, int rhs) {
    AstNode n;
    n.kind = kind;
    n.position = position;
    n.children = {lhs, rhs};
    return add(std::move(n));
  }

  int expr() {
    int lhs = term();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(AstNode::Kind::kAdd, at, lhs, term());
      } else if (accept('-')) {
        lhs = binary(AstNode::Kind::kSub, at, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  int term() {
    int lhs = unary();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(AstNode::Kind::kMul, at, lhs, unary());
      } else if (accept('/')) {
        lhs = binary(AstNode::Kind::kDiv, at, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  int unary() {
    skip_space();
    std::size_t at = pos_;
    if (accept('-')) {
      AstNode n;
      n.kind = AstNode::Kind::kNeg;
      n.position = at;
      n.children = {unary()};
      return add(std::move(n));
    }
    return power();
  }

  int power() {
    int base = atom();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(pos_, "expected a nonnegative integer exponent");
    }
    int exponent = number();
    return binary(AstNode::Kind::kPow, at, base, exponent);
  }

  int number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    AstNode n;
    n.kind = AstNode::Kind::kNumber;
    n.position = start;
    n.number = Integer(text_.substr(start, pos_ - start));
    return add(std::move(n));
  }

  int atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      AstNode n;
      n.kind = AstNode::Kind::kSymbol;
      n.position = start;
      n.symbol = text_.substr(start, pos_ - start);
      return add(std::move(n));
    }
    if (accept('(')) {
      int inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Ast ast_;
};

FieldElement eval_node(const Ast& ast, int index, const SymbolTable& symbols) {
  const AstNode& n = ast.nodes.at(static_cast<std::size_t>(index));
  auto child = [&](int k) { return eval_node(ast, n.children[static_cast<std::size_t>(k)], symbols); };
  switch (n.kind) {
    case AstNode::Kind::kNumber:
      return FieldElement(n.number);
    case AstNode::Kind::kSymbol: {
      auto var = symbols(n.symbol);
      if (!var) raise(ErrorCode::kUnknownSymbol, "unknown symbol '" + n.symbol + "'");
      return FieldElement::variable(*var);
    }
    case AstNode::Kind::kNeg:
      return -child(0);
    case AstNode::Kind::kAdd:
      return child(0) + child(1);
    case AstNode::Kind::kSub:
      return child(0) - child(1);
    case AstNode::Kind::kMul:
      return child(0) * child(1);
    case AstNode::Kind::kDiv: {
      FieldElement d = child(1);
      if (d.is_zero()) raise(ErrorCode::kArithmetic, "division by zero at position " + std::to_string(n.position));
      return child(0) / d;
    }
    case AstNode::Kind::kPow: {
      const Integer& e = ast.nodes.at(static_cast<std::size_t>(n.children[1])).number;
      if (e > 100000) raise(ErrorCode::kResourceLimit, "exponent too large");
      return pow(child(0), static_cast<int>(e.get_si()));
    }
  }
  raise(ErrorCode::kInvalidArgument, "malformed expression tree");
}

struct Term {
  std::vector<int> exps;
  Rational coef;
};

std::vector<Term> collect_terms(const MPoly& p, const Integer& den, std::size_t nvars,
                                const std::vector<int>& significance) {
  std::vector<Term> terms;
  p.for_each_term(static_cast<int>(nvars), [&](const std::vector<int>& exps, const Integer& c) {
    Rational q(c, den);
    q.canonicalize();
    terms.push_back({exps, q});
  });
  std::vector<int> order = significance;
  if (order.empty()) {
    for (int v = static_cast<int>(nvars) - 1; v >= 0; --v) order.push_back(v);
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    for (int v : order) {
      auto idx = static_cast<std::size_t>(v);
      int ea = idx < a.exps.size() ? a.exps[idx] : 0;
      int eb = idx < b.exps.size() ? b.exps[idx] : 0;
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  return terms;
}

std::size_t nvars_for(const MPoly& a, const MPoly& b, const std::vector<std::string>& names) {
  int top = std::max(a.var(), b.var());
  if (top >= static_cast<int>(names.size())) {
    raise(ErrorCode::kInvalidArgument, "no name for variable " + std::to_string(top));
  }
  return names.size();
}

std::string plain_term(const Term& t, const std::vector<std::string>& names) {
  std::string mono;
  for (std::size_t v = 0; v < t.exps.size(); ++v) {
    if (t.exps[v] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += names[v];
    if (t.exps[v] > 1) mono += "^" + std::to_string(t.exps[v]);
  }
  Integer num = t.coef.get_num();
  const Integer& den = t.coef.get_den();
  std::string s;
  if (mono.empty()) {
    s = num.get_str();
  } else if (num == 1) {
    s = mono;
  } else if (num == -1) {
    s = "-" + mono;
  } else {
    s = num.get_str() + "*" + mono;
  }
  if (den != 1) s += "/" + den.get_str();
  return s;
}

std::string latex_term(const Term& t, const std::vector<std::string>& names) {
  std::string mono;
  for (std::size_t v = 0; v < t.exps.size(); ++v) {
    if (t.exps[v] == 0) continue;
    if (!mono.empty()) mono += " ";
    mono += latex_name(names[v]);
    if (t.exps[v] > 1) mono += "^{" + std::to_string(t.exps[v]) + "}";
  }
  Integer num = t.coef.get_num();
  const Integer& den = t.coef.get_den();
  std::string sign = num < 0 ? "-" : "";
  Integer a = abs(num);
  std::string coef;
  if (den != 1) {
    coef = "\\frac{" + a.get_str() + "}{" + den.get_str() + "}";
  } else if (a != 1 || mono.empty()) {
    coef = a.get_str();
  }
  if (!coef.empty() && !mono.empty()) coef += " ";
  return sign + coef + mono;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-') {
      out += parts[i];
    } else {
      out += "+" + parts[i];
    }
  }
  return out;
}

std::string render_terms(const std::vector<Term>& terms, const std::vector<std::string>& names, bool latex) {
  std::vector<std::string> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) parts.push_back(latex ? latex_term(t, names) : plain_term(t, names));
  return join_terms(parts);
}

}  // namespace

Ast parse(const std::string& text) { return Parser(text).run(); }

FieldElement evaluate(const Ast& ast, const SymbolTable& symbols) {
  if (ast.root < 0) raise(ErrorCode::kSyntax, "empty expression");
  return eval_node(ast, ast.root, symbols);
}

FieldElement parse_element(const std::string& text, const SymbolTable& symbols) {
  return evaluate(parse(text), symbols);
}

SymbolTable symbol_table(const std::vector<std::string>& names) {
  return [names](const std::string& name) -> std::optional<int> {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
  };
}

std::optional<Format> format_from_string(const std::string& name) {
  if (name == "plain") return Format::kPlain;
  if (name == "json") return Format::kJson;
  if (name == "latex") return Format::kLatex;
  return std::nullopt;
}

std::string render_poly(const MPoly& p, const std::vector<std::string>& names, const std::vector<int>& significance) {
  std::size_t nvars = nvars_for(p, MPoly(), names);
  return render_terms(collect_terms(p, Integer(1), nvars, significance), names, false);
}

std::string render(const FieldElement& f, const std::vector<std::string>& names, Format format,
                   const std::vector<int>& significance) {
  if (format == Format::kJson) return json_quote(render(f, names, Format::kPlain, significance));
  bool latex = format == Format::kLatex;
  std::size_t nvars = nvars_for(f.num(), f.den(), names);
  if (f.den().is_constant()) {
    return render_terms(collect_terms(f.num(), f.den().constant(), nvars, significance), names, latex);
  }
  auto num_terms = collect_terms(f.num(), Integer(1), nvars, significance);
  auto den_terms = collect_terms(f.den(), Integer(1), nvars, significance);
  std::string num = render_terms(num_terms, names, latex);
  std::string den = render_terms(den_terms, names, latex);
  if (latex) return "\\frac{" + num + "}{" + den + "}";
  if (num_terms.size() > 1) num = "(" + num + ")";
  if (den_terms.size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

std::string latex_name(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == 0 || split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace primtower
