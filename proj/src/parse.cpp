#include "sepvar/parse.hpp"

#include <cctype>

namespace sepvar {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty input", pos_);
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool digit_ahead() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    if (!digit_ahead()) throw ParseError(pos_ < s_.size() ? "expected integer" : "unexpected end of input", pos_);
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Poly acc = term();
    if (neg) acc = Rational(-1) * acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return Rational(-1) * factor();
    Poly base = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      if (!digit_ahead()) throw ParseError("exponent must be a nonnegative integer", at);
      std::string e = digits();
      if (e.size() > 4 || std::stoi(e) > kMaxExponent) throw ParseError("exponent too large", at);
      return power(base, std::stoi(e));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      if (accept('/')) {
        std::size_t at = pos_;
        mpz_class den(digits(), 10);
        if (den == 0) throw ParseError("zero denominator", at);
        Rational q(num, den);
        q.canonicalize();
        return Poly::constant(q);
      }
      return Poly::constant(Rational(num));
    }
    if (c == 'x') {
      ++pos_;
      return Poly::x();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unknown variable '") + c + "', only x is allowed", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace sepvar
