#include <cctype>
#include <functional>

#include "gcluster/polyring.hpp"

namespace gcluster {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTablePtr& vars) : s_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg +
                     " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  Poly expr() {
    Poly sum(vars_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      if (neg) sum -= t; else sum += t;
      first = false;
    }
    return sum;
  }

  Poly term() {
    Poly prod = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        prod *= factor();
      } else if (c == '/') {
        ++pos_;
        Poly den = factor();
        auto cv = den.constant_value();
        if (!cv || *cv == 0) fail("division only by nonzero constants");
        prod *= Rational(1 / *cv);
      } else if (starts_factor(c)) {
        prod *= factor();
      } else {
        break;
      }
    }
    return prod;
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(vars_, Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return identifier(s_.substr(start, pos_ - start));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  // A run of letters/digits is either one variable or a juxtaposition like x1x4.
  Poly identifier(std::string_view id) {
    if (auto i = vars_->find(id)) return Poly::variable(vars_, *i);
    std::vector<std::size_t> parts;
    std::function<bool(std::size_t)> split = [&](std::size_t at) -> bool {
      if (at == id.size()) return true;
      for (std::size_t len = id.size() - at; len > 0; --len) {
        if (auto i = vars_->find(id.substr(at, len))) {
          parts.push_back(*i);
          if (split(at + len)) return true;
          parts.pop_back();
        }
      }
      return false;
    };
    if (!split(0)) fail("unknown variable '" + std::string(id) + "'");
    Poly prod = Poly::constant(vars_, 1);
    for (auto i : parts) prod *= Poly::variable(vars_, i);
    return prod;
  }

  std::string_view s_;
  const VarTablePtr& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarTablePtr& vars) {
  if (!vars) throw StructuralError("parse without variable table");
  return Parser(text, vars).parse();
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  auto b = t.find_first_not_of(" \t");
  auto e = t.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty rational");
  t = t.substr(b, e - b + 1);
  try {
    Rational q(t);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + t + "'");
  }
}

}  // namespace gcluster
