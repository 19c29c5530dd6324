#include "qsyslab/diagram.hpp"

#include <cctype>
#include <sstream>

namespace qsyslab::diagram {

ExprPtr make_generator(std::string name) {
  return std::make_shared<const Expr>(Expr{Generator{std::move(name)}});
}
ExprPtr make_identity(std::vector<std::string> spaces) {
  return std::make_shared<const Expr>(Expr{Identity{std::move(spaces)}});
}
ExprPtr make_sequential(std::vector<ExprPtr> stages) {
  return std::make_shared<const Expr>(Expr{Sequential{std::move(stages)}});
}
ExprPtr make_parallel(std::vector<ExprPtr> factors) {
  return std::make_shared<const Expr>(Expr{Parallel{std::move(factors)}});
}
ExprPtr make_adjoint(ExprPtr inner) {
  return std::make_shared<const Expr>(Expr{Adjoint{std::move(inner)}});
}

namespace {

bool all_equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!structurally_equal(*a[k], *b[k])) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Generator>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Identity>) {
          return x.spaces == y.spaces;
        } else if constexpr (std::is_same_v<T, Sequential>) {
          return all_equal(x.stages, y.stages);
        } else if constexpr (std::is_same_v<T, Parallel>) {
          return all_equal(x.factors, y.factors);
        } else {
          return structurally_equal(*x.inner, *y.inner);
        }
      },
      a.node);
}

// ---------------------------------------------------------------------------
// Lexer and LL(1) parser

namespace {

enum class Tok { Ident, Id, LBracket, RBracket, Comma, LParen, RParen, Semi, Star, Caret, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++k;
    }
  };
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < src.size() && src[k] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = k;
      while (end < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_')) {
        ++end;
      }
      std::string word = src.substr(k, end - k);
      out.push_back({word == "id" ? Tok::Id : Tok::Ident, word, line, col});
      advance(end - k);
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ';': kind = Tok::Semi; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw SyntaxError("unexpected character", line, col, std::string(1, c));
    }
    out.push_back({kind, std::string(1, c), line, col});
    advance(1);
  }
  out.push_back({Tok::End, "<end of input>", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr expr() {
    std::vector<ExprPtr> stages{par()};
    while (peek().kind == Tok::Semi) {
      next();
      stages.push_back(par());
    }
    return stages.size() == 1 ? stages.front() : make_sequential(std::move(stages));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    next();
  }

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw SyntaxError(message, t.line, t.column, t.text);
  }

private:
  const Token& next() { return toks_[pos_++]; }

  ExprPtr par() {
    std::vector<ExprPtr> factors{post()};
    while (peek().kind == Tok::Star) {
      next();
      factors.push_back(post());
    }
    return factors.size() == 1 ? factors.front() : make_parallel(std::move(factors));
  }

  ExprPtr post() {
    ExprPtr e = atom();
    while (peek().kind == Tok::Caret) {
      next();
      expect(Tok::Star, "'*' after '^'");
      e = make_adjoint(std::move(e));
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        std::string name = t.text;
        next();
        return make_generator(std::move(name));
      }
      case Tok::Id: {
        next();
        expect(Tok::LBracket, "'[' after 'id'");
        std::vector<std::string> spaces;
        if (peek().kind != Tok::Ident) fail("expected space name");
        spaces.push_back(next().text);
        while (peek().kind == Tok::Comma) {
          next();
          if (peek().kind != Tok::Ident) fail("expected space name");
          spaces.push_back(next().text);
        }
        expect(Tok::RBracket, "']'");
        return make_identity(std::move(spaces));
      }
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail("expected a generator, 'id[...]' or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) {
  Parser p(lex(text));
  ExprPtr e = p.expr();
  if (p.peek().kind != Tok::End) p.fail("unexpected token");
  return e;
}

EquationText parse_equation(const std::string& text) {
  Parser p(lex(text));
  ExprPtr lhs = p.expr();
  p.expect(Tok::Equals, "'='");
  ExprPtr rhs = p.expr();
  if (p.peek().kind != Tok::End) p.fail("unexpected token");
  return {std::move(lhs), std::move(rhs)};
}

std::vector<NamedEquation> parse_equation_file(const std::string& text) {
  std::vector<NamedEquation> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw SyntaxError("expected 'name:'", lineno, 1, line);
    const auto b = body.find_first_not_of(" \t");
    const auto e = body.find_last_not_of(" \t", colon - 1);
    if (b >= colon) throw SyntaxError("empty equation name", lineno, colon + 1, ":");
    try {
      out.push_back({body.substr(b, e - b + 1), parse_equation(body.substr(colon + 1)), lineno});
    } catch (const SyntaxError& err) {
      throw SyntaxError("bad equation", lineno, err.column() + colon + 1, err.token());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(const Expr& e) {
  if (std::holds_alternative<Sequential>(e.node)) return 0;
  if (std::holds_alternative<Parallel>(e.node)) return 1;
  if (std::holds_alternative<Adjoint>(e.node)) return 2;
  return 3;
}

void print_to(std::ostream& os, const Expr& e, int min_prec) {
  const bool parens = precedence(e) < min_prec;
  if (parens) os << '(';
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Generator>) {
          os << x.name;
        } else if constexpr (std::is_same_v<T, Identity>) {
          os << "id[";
          for (std::size_t k = 0; k < x.spaces.size(); ++k) os << (k ? "," : "") << x.spaces[k];
          os << ']';
        } else if constexpr (std::is_same_v<T, Sequential>) {
          for (std::size_t k = 0; k < x.stages.size(); ++k) {
            if (k) os << " ; ";
            print_to(os, *x.stages[k], 1);
          }
        } else if constexpr (std::is_same_v<T, Parallel>) {
          for (std::size_t k = 0; k < x.factors.size(); ++k) {
            if (k) os << " * ";
            print_to(os, *x.factors[k], 2);
          }
        } else {
          print_to(os, *x.inner, 2);
          os << "^*";
        }
      },
      e.node);
  if (parens) os << ')';
}

}  // namespace

std::string print(const Expr& e) {
  std::ostringstream os;
  print_to(os, e, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Environment

bool Environment::declares(const Space& s) const {
  for (const auto& [name, word] : spaces_) {
    for (const auto& f : word.factors()) {
      if (f == s) return true;
    }
  }
  return false;
}

void Environment::add_space(const std::string& name, const Space& space) {
  spaces_.insert_or_assign(name, Word(space));
}

void Environment::add_alias(const std::string& name, const Word& word) {
  spaces_.insert_or_assign(name, word);
}

void Environment::add_generator(const std::string& name, const LinearMap& map) {
  for (const Word* w : {&map.domain(), &map.codomain()}) {
    for (const auto& s : w->factors()) {
      if (!declares(s)) {
        throw TypeError("generator '" + name + "' uses undeclared space '" + s.name() + "'");
      }
    }
  }
  generators_.insert_or_assign(name, map);
}

const Word& Environment::space(const std::string& name) const {
  auto it = spaces_.find(name);
  if (it == spaces_.end()) throw UnknownGenerator(name);
  return it->second;
}

const LinearMap& Environment::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw UnknownGenerator(name);
  return it->second;
}

// ---------------------------------------------------------------------------
// Type checking and evaluation

Signature typecheck(const Expr& e, const Environment& env) {
  return std::visit(
      [&](const auto& x) -> Signature {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Generator>) {
          const LinearMap& g = env.generator(x.name);
          return {g.domain(), g.codomain()};
        } else if constexpr (std::is_same_v<T, Identity>) {
          Word w;
          for (const auto& s : x.spaces) w = concat(w, env.space(s));
          return {w, w};
        } else if constexpr (std::is_same_v<T, Sequential>) {
          if (x.stages.empty()) throw TypeError("empty sequential composite");
          Signature sig = typecheck(*x.stages.front(), env);
          for (std::size_t k = 1; k < x.stages.size(); ++k) {
            Signature next = typecheck(*x.stages[k], env);
            if (!(next.domain == sig.codomain)) {
              throw TypeError("stage " + std::to_string(k + 1) + " (" + print(*x.stages[k]) +
                              ") expects " + next.domain.to_string() + " but stage " +
                              std::to_string(k) + " produces " + sig.codomain.to_string());
            }
            sig.codomain = std::move(next.codomain);
          }
          return sig;
        } else if constexpr (std::is_same_v<T, Parallel>) {
          Signature sig;
          for (const auto& f : x.factors) {
            Signature s = typecheck(*f, env);
            sig.domain = concat(sig.domain, s.domain);
            sig.codomain = concat(sig.codomain, s.codomain);
          }
          return sig;
        } else {
          Signature s = typecheck(*x.inner, env);
          return {s.codomain, s.domain};
        }
      },
      e.node);
}

namespace {

LinearMap eval_checked(const Expr& e, const Environment& env);

// (id_left (x) e (x) id_right) o x
LinearMap apply(const Expr& e, const Word& left, const Word& right, LinearMap x,
                const Environment& env) {
  return std::visit(
      [&](const auto& node) -> LinearMap {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return x;
        } else if constexpr (std::is_same_v<T, Sequential>) {
          for (const auto& s : node.stages) x = apply(*s, left, right, std::move(x), env);
          return x;
        } else if constexpr (std::is_same_v<T, Parallel>) {
          // f1 (x) ... (x) fk applied right to left: when fi acts, the factors to its
          // right already carry their codomains and those to its left their domains.
          std::vector<Signature> sigs;
          for (const auto& f : node.factors) sigs.push_back(typecheck(*f, env));
          for (std::size_t i = node.factors.size(); i-- > 0;) {
            Word l = left;
            for (std::size_t j = 0; j < i; ++j) l = concat(l, sigs[j].domain);
            Word r;
            for (std::size_t j = i + 1; j < sigs.size(); ++j) r = concat(r, sigs[j].codomain);
            r = concat(r, right);
            x = apply(*node.factors[i], l, r, std::move(x), env);
          }
          return x;
        } else {
          return whisker_apply(left, eval_checked(e, env), right, x);
        }
      },
      e.node);
}

LinearMap eval_checked(const Expr& e, const Environment& env) {
  if (const auto* g = std::get_if<Generator>(&e.node)) return env.generator(g->name);
  if (const auto* a = std::get_if<Adjoint>(&e.node)) return adjoint(eval_checked(*a->inner, env));
  if (const auto* p = std::get_if<Parallel>(&e.node)) {
    LinearMap acc = eval_checked(*p->factors.front(), env);
    for (std::size_t k = 1; k < p->factors.size(); ++k) {
      acc = tensor(acc, eval_checked(*p->factors[k], env));
    }
    return acc;
  }
  const Signature sig = typecheck(e, env);
  if (const auto* s = std::get_if<Sequential>(&e.node)) {
    LinearMap x = eval_checked(*s->stages.front(), env);
    for (std::size_t k = 1; k < s->stages.size(); ++k) {
      x = apply(*s->stages[k], Word{}, Word{}, std::move(x), env);
    }
    return x;
  }
  return identity(sig.domain);
}

}  // namespace

LinearMap eval(const Expr& e, const Environment& env) {
  typecheck(e, env);
  return eval_checked(e, env);
}

LinearMap eval(const std::string& text, const Environment& env) { return eval(*parse(text), env); }

EquationReport check_equation(const Expr& lhs, const Expr& rhs, const Environment& env,
                              Tolerance tol) {
  const Signature a = typecheck(lhs, env);
  const Signature b = typecheck(rhs, env);
  if (!(a.domain == b.domain) || !(a.codomain == b.codomain)) {
    throw SignatureMismatch("equation sides differ: " + a.domain.to_string() + " -> " +
                            a.codomain.to_string() + " vs " + b.domain.to_string() + " -> " +
                            b.codomain.to_string());
  }
  const double residual = max_abs_diff(eval_checked(lhs, env), eval_checked(rhs, env));
  return {a, residual, residual <= tol.eps, tol};
}

EquationReport check_equation(const std::string& lhs, const std::string& rhs,
                              const Environment& env, Tolerance tol) {
  return check_equation(*parse(lhs), *parse(rhs), env, tol);
}

void check_into(VerificationReport& report, const std::string& axiom, const std::string& lhs,
                const std::string& rhs, const Environment& env) {
  const EquationReport r = check_equation(lhs, rhs, env, report.tolerance());
  report.add(axiom, r.residual);
}

}  // namespace qsyslab::diagram
