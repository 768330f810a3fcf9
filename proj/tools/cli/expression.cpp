#include "cli/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace symcurv::cli {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& vars) : text_(text), vars_(vars) {}

  Rational parse() {
    Rational v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression \"" + std::string(text_) + "\": " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int peek() {
    skip_ws();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Rational expr() {
    Rational v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  // A factor can start a juxtaposed product.
  bool starts_factor() {
    int c = peek();
    return c == '(' || (c >= 0 && std::isalnum(c));
  }

  Rational term() {
    Rational v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else if (starts_factor()) {
        v *= primary();
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Rational primary() {
    int c = peek();
    if (c == '(') {
      ++pos_;
      Rational v = expr();
      expect(')');
      return v;
    }
    if (c >= 0 && std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(Rational::Integer(std::string(text_.substr(start, pos_ - start))), 1);
    }
    if (c >= 0 && std::isalpha(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if ((word == "min" || word == "floor") && peek() == '(') return call(word);
      // a run of letters is a product of single-letter variables
      pos_ = start + 1;
      return variable(word.substr(0, 1));
    }
    if (c < 0) fail("unexpected end");
    fail("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  Rational variable(std::string_view name) {
    auto it = vars_.find(name);
    if (it == vars_.end()) fail("unbound variable '" + std::string(name) + "'");
    return it->second;
  }

  Rational call(std::string_view fn) {
    expect('(');
    std::vector<Rational> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    if (fn == "floor") {
      if (args.size() != 1) fail("floor takes one argument");
      const Rational& x = args[0];
      Rational::Integer q = x.numerator() / x.denominator();
      if (x.sign() < 0 && !x.is_integer()) q -= 1;
      return Rational(q, 1);
    }
    Rational best = args[0];
    for (const Rational& a : args) {
      if (a < best) best = a;
    }
    return best;
  }

  std::string_view text_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational evaluate(std::string_view expr, const Bindings& vars) {
  return Parser(expr, vars).parse();
}

}  // namespace symcurv::cli
