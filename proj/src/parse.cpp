#include "dmk/parse.hpp"

#include <cctype>

namespace dmk {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input at position " + std::to_string(pos_));
    return p;
  }

 private:
  int nvars() const { return static_cast<int>(vars_.size()); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = eat('-');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError("expected exponent after '^'");
      b = b.pow(std::stoi(text_.substr(start, pos_ - start)));
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) throw ParseError("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                     std::to_string(pos_));
  }

  Poly rational() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(text_.substr(start, pos_ - start));
    mpz_class den(1);
    size_t save = pos_;
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) { pos_ = save; }  // "p/ x" is not a rational
      else {
        den = mpz_class(text_.substr(dstart, pos_ - dstart));
        if (den == 0) throw ParseError("zero denominator");
      }
    }
    Scalar q(num, den);
    q.canonicalize();
    return Poly(nvars(), q);
  }

  Poly ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return Poly::variable(nvars(), static_cast<int>(i));
    throw ParseError("undeclared variable '" + name + "'");
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace dmk
