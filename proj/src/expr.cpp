#include "qg/expr.hpp"

#include <cctype>

namespace qg::num {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(Errc::PARSE_ERROR, "empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw Error(Errc::PARSE_ERROR, "bad rational literal '" + text + "'");
  if (q.get_den() == 0) throw Error(Errc::DIVISION_BY_ZERO, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

class Parser {
public:
  Parser(const CtxPtr& ctx, const std::string& text) : ctx_(ctx), text_(text) {}

  FieldElement run() {
    FieldElement e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw Error(Errc::PARSE_ERROR, "trailing input at '" + rest() + "'");
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string rest() { return text_.substr(pos_, 12); }

  FieldElement expr() {
    FieldElement acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  FieldElement term() {
    FieldElement acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  FieldElement factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      FieldElement e = expr();
      if (peek() != ')') throw Error(Errc::PARSE_ERROR, "expected ')' at '" + rest() + "'");
      ++pos_;
      return e;
    }
    if (c == 'z') {
      ++pos_;
      long k = 1;
      if (peek() == '^') {
        ++pos_;
        k = integer();
      }
      return zeta(ctx_, ctx_->conductor).pow(k);
    }
    if (c == 's') {
      ++pos_;
      if (!ctx_->adjunct)
        throw Error(Errc::PARSE_ERROR, "'s' used but the context has no adjunct");
      return FieldElement::adjunct_root(ctx_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    throw Error(Errc::PARSE_ERROR, pos_ < text_.size()
                                       ? "unexpected character at '" + rest() + "'"
                                       : "unexpected end of input");
  }

  FieldElement rational() {
    Rational num(integer());
    if (peek() == '/') {
      ++pos_;
      long den = integer();
      if (den <= 0) throw Error(Errc::PARSE_ERROR, "denominator must be positive");
      num /= den;
    }
    return FieldElement::from_rational(ctx_, num);
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw Error(Errc::PARSE_ERROR, "expected integer at '" + rest() + "'");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? -value : value;
  }

  CtxPtr ctx_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(const CtxPtr& ctx, const std::string& text) {
  return Parser(ctx, text).run();
}

}  // namespace qg::num
