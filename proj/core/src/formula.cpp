#include "semitree/formula.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace semitree {

namespace {

enum class Tok { Ident, Op, LParen, RParen, Comma, Not, And, Or, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, text.substr(i, j - i)});
      i = j;
      continue;
    }
    auto two = [&](const char* s) {
      return i + 1 < text.size() && text[i] == s[0] && text[i + 1] == s[1];
    };
    if (two("||")) {
      out.push_back({Tok::Op, "||"});
      i += 2;
    } else if (two("<=") || two(">=") || two("==") || two("!=")) {
      out.push_back({Tok::Op, text.substr(i, 2)});
      i += 2;
    } else if (c == '<' || c == '>' || c == '=') {
      out.push_back({Tok::Op, std::string(1, c)});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|"});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&"});
      ++i;
    } else if (c == '!') {
      out.push_back({Tok::Not, "!"});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")"});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ","});
      ++i;
    } else {
      throw std::invalid_argument(std::string("formula: unexpected character '") + c +
                                  "'");
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  size_t at = 0;
  std::vector<std::string> vars;
  std::map<std::string, int> var_index;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  int var(const std::string& name) {
    auto it = var_index.find(name);
    if (it != var_index.end()) return it->second;
    const int idx = static_cast<int>(vars.size());
    vars.push_back(name);
    var_index.emplace(name, idx);
    return idx;
  }

  int expect_var() {
    if (peek().kind != Tok::Ident) {
      throw std::invalid_argument("formula: expected a variable, got '" + peek().text +
                                  "'");
    }
    return var(take().text);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw std::invalid_argument(std::string("formula: expected ") + what + ", got '" +
                                  peek().text + "'");
    }
    ++at;
  }

  QfFormula parse_or() {
    QfFormula f = parse_and();
    if (peek().kind != Tok::Or) return f;
    QfFormula node;
    node.kind = FormulaKind::Or;
    node.children.push_back(std::move(f));
    while (peek().kind == Tok::Or) {
      ++at;
      node.children.push_back(parse_and());
    }
    return node;
  }

  QfFormula parse_and() {
    QfFormula f = parse_unary();
    if (peek().kind != Tok::And) return f;
    QfFormula node;
    node.kind = FormulaKind::And;
    node.children.push_back(std::move(f));
    while (peek().kind == Tok::And) {
      ++at;
      node.children.push_back(parse_unary());
    }
    return node;
  }

  QfFormula parse_unary() {
    if (peek().kind == Tok::Not) {
      ++at;
      QfFormula node;
      node.kind = FormulaKind::Not;
      node.children.push_back(parse_unary());
      return node;
    }
    if (peek().kind == Tok::LParen) {
      ++at;
      QfFormula f = parse_or();
      expect(Tok::RParen, "')'");
      return f;
    }
    return parse_atom();
  }

  QfFormula parse_atom() {
    if (peek().kind != Tok::Ident) {
      throw std::invalid_argument("formula: expected an atom, got '" + peek().text +
                                  "'");
    }
    Token head = take();
    const bool functional = peek().kind == Tok::LParen &&
                            (head.text == "B" || head.text == "C" ||
                             head.text == "R" || head.text == "D");
    QfFormula atom;
    atom.kind = FormulaKind::Atom;
    if (functional) {
      ++at;  // '('
      atom.rel = relation_from_string(head.text);
      const int arity = relation_arity(atom.rel);
      atom.args.push_back(expect_var());
      for (int k = 1; k < arity; ++k) {
        if (peek().kind == Tok::Comma) ++at;  // C(z, x y) has a bare space
        atom.args.push_back(expect_var());
      }
      expect(Tok::RParen, "')'");
      return atom;
    }
    const int lhs = var(head.text);
    if (peek().kind != Tok::Op) {
      throw std::invalid_argument("formula: expected a comparison after '" + head.text +
                                  "'");
    }
    const std::string op = take().text;
    const int rhs = expect_var();
    atom.rel = relation_from_string(op);
    atom.args = {lhs, rhs};
    return atom;
  }
};

// Infix spelling accepted back by the tokenizer.
std::string infix_symbol(RelationName rel) {
  switch (rel) {
    case RelationName::eq: return "=";
    case RelationName::neq: return "!=";
    case RelationName::leq: return "<=";
    case RelationName::lt: return "<";
    case RelationName::gt: return ">";
    case RelationName::geq: return ">=";
    case RelationName::perp: return "||";
    default: return relation_to_string(rel);
  }
}

bool chain_less(const Rat& a, const Rat& b) { return a < b; }

bool eval_chain_atom(RelationName rel, const std::vector<int>& args,
                     const std::vector<Rat>& t) {
  auto v = [&](int k) -> const Rat& { return t[args[k]]; };
  switch (rel) {
    case RelationName::eq:
      return v(0) == v(1);
    case RelationName::neq:
      return v(0) != v(1);
    case RelationName::leq:
      return v(0) <= v(1);
    case RelationName::lt:
      return chain_less(v(0), v(1));
    case RelationName::gt:
      return chain_less(v(1), v(0));
    case RelationName::geq:
      return v(1) <= v(0);
    case RelationName::perp:
    case RelationName::C:
      return false;
    case RelationName::B:
      return (chain_less(v(0), v(1)) && chain_less(v(1), v(2))) ||
             (chain_less(v(2), v(1)) && chain_less(v(1), v(0)));
    case RelationName::R:
      return chain_less(v(0), v(2)) && chain_less(v(1), v(2));
    case RelationName::D: {
      // Both C disjuncts of the original definition are false on a chain.
      return false;
    }
  }
  return false;
}

}  // namespace

ParsedFormula parse_formula(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  Parser parser{toks};
  ParsedFormula out;
  out.formula = parser.parse_or();
  if (parser.peek().kind != Tok::End) {
    throw std::invalid_argument("formula: trailing input at '" + parser.peek().text +
                                "'");
  }
  out.variables = std::move(parser.vars);
  return out;
}

bool eval_formula(const QfFormula& f, const std::vector<Node>& tuple) {
  switch (f.kind) {
    case FormulaKind::Atom: {
      std::vector<Node> args;
      args.reserve(f.args.size());
      for (int a : f.args) {
        if (a < 0 || a >= static_cast<int>(tuple.size())) {
          throw std::invalid_argument("formula: tuple too short for the variables");
        }
        args.push_back(tuple[a]);
      }
      return eval_relation(f.rel, args);
    }
    case FormulaKind::Not:
      return !eval_formula(f.children[0], tuple);
    case FormulaKind::And:
      for (const QfFormula& c : f.children) {
        if (!eval_formula(c, tuple)) return false;
      }
      return true;
    case FormulaKind::Or:
      for (const QfFormula& c : f.children) {
        if (eval_formula(c, tuple)) return true;
      }
      return false;
  }
  return false;
}

bool eval_formula_on_chain(const QfFormula& f, const std::vector<Rat>& tuple) {
  switch (f.kind) {
    case FormulaKind::Atom:
      for (int a : f.args) {
        if (a < 0 || a >= static_cast<int>(tuple.size())) {
          throw std::invalid_argument("formula: tuple too short for the variables");
        }
      }
      return eval_chain_atom(f.rel, f.args, tuple);
    case FormulaKind::Not:
      return !eval_formula_on_chain(f.children[0], tuple);
    case FormulaKind::And:
      for (const QfFormula& c : f.children) {
        if (!eval_formula_on_chain(c, tuple)) return false;
      }
      return true;
    case FormulaKind::Or:
      for (const QfFormula& c : f.children) {
        if (eval_formula_on_chain(c, tuple)) return true;
      }
      return false;
  }
  return false;
}

std::string formula_to_string(const QfFormula& f,
                              const std::vector<std::string>& variables) {
  switch (f.kind) {
    case FormulaKind::Atom: {
      if (f.rel == RelationName::C) {
        return "C(" + variables[f.args[0]] + ", " + variables[f.args[1]] + " " +
               variables[f.args[2]] + ")";
      }
      if (f.args.size() == 2) {
        return variables[f.args[0]] + " " + infix_symbol(f.rel) + " " +
               variables[f.args[1]];
      }
      std::string out = relation_to_string(f.rel) + "(";
      for (size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ",";
        out += variables[f.args[i]];
      }
      return out + ")";
    }
    case FormulaKind::Not:
      return "!(" + formula_to_string(f.children[0], variables) + ")";
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::string out = "(";
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += f.kind == FormulaKind::And ? " & " : " | ";
        out += formula_to_string(f.children[i], variables);
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace semitree
