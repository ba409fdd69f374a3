/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Recursive-descent evaluator for the map grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' exponent)?
//   exponent:= INT ('^' exponent)?          right associative
//   primary := INT | IDENT | 'sqrt(' ['-'] INT ')' | '(' expr ')'
//
// Values are built bottom-up in whatever algebra the caller supplies, so the
// same grammar parses curve functions, one-variable maps and plain numbers.

#ifndef TBELYI_EXPR_HPP
#define TBELYI_EXPR_HPP

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "tbelyi/error.hpp"
#include "tbelyi/numfield.hpp"

namespace tbelyi {

template <class Value>
struct ExprAlgebra {
  std::function<Value(std::string_view)> variable;
  std::function<Value(const FieldElement&)> constant;
};

namespace detail {

template <class Value>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprAlgebra<Value>& algebra)
      : text_(text), algebra_(algebra) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer literal");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  unsigned long exponent() {
    Integer base = integer_literal();
    if (accept('^')) {
      unsigned long e = exponent();
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
      base = r;
    }
    if (!base.fits_ulong_p() || base > 4096) fail("exponent too large");
    return base.get_ui();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    if (!peek_digit()) fail("exponent must be a nonnegative integer literal");
    unsigned long e = exponent();
    Value result = algebra_.constant(FieldElement(1));
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return algebra_.constant(FieldElement(Rational(integer_literal())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "sqrt") {
        expect('(');
        bool negative = accept('-');
        Integer d = integer_literal();
        expect(')');
        if (negative) d = -d;
        return algebra_.constant(FieldElement::radical(d));
      }
      if (!algebra_.variable) fail("variables are not allowed here");
      return algebra_.variable(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const ExprAlgebra<Value>& algebra_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class Value>
Value parse_expression(std::string_view text, const ExprAlgebra<Value>& algebra) {
  return detail::ExprParser<Value>(text, algebra).parse();
}

}  // namespace tbelyi

#endif
