#include "pentaform/poly.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace pentaform {

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.add_term({{name, 1}}, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : rhs.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      out.add_term(m, checked_mul(c1, c2));
    }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InputError("negative exponent");
  Polynomial out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(c);
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      term = term * (it == values.end() ? variable(v).pow(e) : it->second.pow(e));
    }
    out = out + term;
  }
  return out;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) names.insert(v);
  return {names.begin(), names.end()};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const Int a = c < 0 ? -c : c;
    if (a != 1 || m.empty()) os << a << (m.empty() ? "" : "*");
    bool firstvar = true;
    for (const auto& [v, e] : m) {
      os << (firstvar ? "" : "*") << v;
      if (e > 1) os << '^' << e;
      firstvar = false;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Token {
  enum Kind { Number, Ident, Symbol, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*^(),").find(c) != std::string::npos) {
      out.push_back({Token::Symbol, std::string(1, c), i});
      ++i;
    } else {
      throw InputError("unexpected character '" + std::string(1, c) + "' in \"" + s + "\"");
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Definitions& defs, int depth)
      : text_(text), tokens_(tokenize(text)), defs_(defs), depth_(depth) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Token::End) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is(const char* sym) const { return peek().kind == Token::Symbol && peek().text == sym; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError(why + " at offset " + std::to_string(peek().pos) + " in \"" + text_ + "\"");
  }
  void expect(const char* sym) {
    if (!is(sym)) fail(std::string("expected '") + sym + "'");
    ++pos_;
  }

  Polynomial expr() {
    Polynomial p = term();
    while (is("+") || is("-")) {
      const bool plus = is("+");
      ++pos_;
      Polynomial t = term();
      p = plus ? p + t : p - t;
    }
    return p;
  }

  bool starts_factor() const { return peek().kind == Token::Number || peek().kind == Token::Ident || is("("); }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (is("*")) {
        ++pos_;
        p = p * unary();
      } else if (starts_factor()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (is("-")) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (is("^")) {
      ++pos_;
      if (peek().kind != Token::Number) fail("exponent must be a non-negative integer");
      const int e = std::stoi(peek().text);
      ++pos_;
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    const Token t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      return Polynomial::constant(std::stoll(t.text));
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      if (!is("(")) return Polynomial::variable(t.text);
      auto it = defs_.find(t.text);
      if (it == defs_.end()) fail("call to undefined function " + t.text);
      ++pos_;
      std::vector<Polynomial> args;
      if (!is(")")) {
        args.push_back(expr());
        while (is(",")) {
          ++pos_;
          args.push_back(expr());
        }
      }
      expect(")");
      return call(it->first, it->second, args);
    }
    if (is("(")) {
      ++pos_;
      Polynomial p = expr();
      expect(")");
      return p;
    }
    fail("expected a factor");
  }

  Polynomial call(const std::string& name, const FunctionDef& def, const std::vector<Polynomial>& args) {
    if (args.size() != def.params.size()) fail("wrong number of arguments to " + name);
    if (depth_ > 16) fail("function definitions nest too deeply");
    const Polynomial body = Parser(def.body, defs_, depth_ + 1).parse();
    std::map<std::string, Polynomial> values;
    for (std::size_t i = 0; i < args.size(); ++i) values[def.params[i]] = args[i];
    return body.substitute(values);
  }

  std::string text_;
  std::vector<Token> tokens_;
  const Definitions& defs_;
  int depth_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Definitions& defs) { return Parser(text, defs, 0).parse(); }

bool expand_identity(const PolyIdentity& id) {
  std::map<std::string, Polynomial> subs;
  for (const auto& [name, expr] : id.substitutions) {
    if (subs.count(name)) throw InputError("variable " + name + " substituted twice in " + id.label);
    const Polynomial p = parse_polynomial(expr, id.definitions);
    if (p.degree() > 1) throw InputError("substitution for " + name + " is not affine in " + id.label);
    subs[name] = p;
  }
  for (const auto& [name, p] : subs)
    for (const auto& v : p.variables())
      if (subs.count(v)) throw InputError("substitution for " + name + " refers to derived variable " + v);
  const Polynomial lhs = parse_polynomial(id.lhs, id.definitions).substitute(subs);
  const Polynomial rhs = parse_polynomial(id.rhs, id.definitions).substitute(subs);
  return lhs == rhs;
}

namespace {

// Offsets of coefficient literals, skipping exponents.
std::vector<std::pair<std::size_t, std::size_t>> coefficient_literals(const std::string& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto tokens = tokenize(s);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].kind == Token::Number && !(i > 0 && tokens[i - 1].kind == Token::Symbol && tokens[i - 1].text == "^"))
      out.emplace_back(tokens[i].pos, tokens[i].text.size());
  return out;
}

std::string bump(const std::string& s, std::pair<std::size_t, std::size_t> lit) {
  const Int v = std::stoll(s.substr(lit.first, lit.second));
  return s.substr(0, lit.first) + std::to_string(v + 1) + s.substr(lit.first + lit.second);
}

}  // namespace

std::vector<PolyIdentity> coefficient_mutations(const PolyIdentity& id) {
  std::vector<PolyIdentity> out;
  auto mutate_field = [&](auto&& get) {
    PolyIdentity probe = id;
    const std::string text = get(probe);
    for (const auto& lit : coefficient_literals(text)) {
      PolyIdentity m = id;
      get(m) = bump(text, lit);
      out.push_back(std::move(m));
    }
  };
  mutate_field([](PolyIdentity& p) -> std::string& { return p.lhs; });
  mutate_field([](PolyIdentity& p) -> std::string& { return p.rhs; });
  for (std::size_t i = 0; i < id.substitutions.size(); ++i)
    mutate_field([i](PolyIdentity& p) -> std::string& { return p.substitutions[i].second; });
  for (const auto& [name, def] : id.definitions)
    mutate_field([&name](PolyIdentity& p) -> std::string& { return p.definitions[name].body; });
  return out;
}

}  // namespace pentaform
