#include "eqhilb/exactalg/parse.hpp"

#include <cctype>
#include <string>

#include "eqhilb/errors.hpp"

namespace eqhilb {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : vars_(vars) {
    // Normalize U+2212 to '-'.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
        src_ += '-';
        i += 2;
      } else {
        src_ += text[i];
      }
    }
  }

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      if (eat('*')) acc = acc * unary();
      else if (eat('/')) {
        RatFun d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else return acc;
    }
  }

  RatFun unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (!eat('^')) return base;
    skip_ws();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    if (digits.size() > 4) fail("exponent too large");
    RatFun r(MPoly(vars_, 1));
    for (unsigned e = std::stoul(digits); e > 0; --e) r = r * base;
    return r;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      d += src_[pos_++];
    return d;
  }

  RatFun atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (eat('(')) {
      RatFun r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(MPoly(vars_, Integer(read_digits())));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
        name += src_[pos_++];
      const auto idx = vars_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return RatFun(MPoly::variable(vars_, *idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const VarSet& vars_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text, const VarSet& vars) { return Parser(text, vars).parse(); }

MPoly parse_poly(std::string_view text, const VarSet& vars) {
  RatFun r = parse_ratfun(text, vars);
  if (!r.den().is_constant()) throw ParseError("expected a polynomial, got a rational function");
  return r.num().exact_divide(r.den().constant_term());
}

VarSet infer_vars(std::string_view text) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == 's' && (text[i + 1] == '1' || text[i + 1] == '2')) return VarSet{"t", "s1", "s2"};
  return VarSet{"t", "s"};
}

}  // namespace eqhilb
