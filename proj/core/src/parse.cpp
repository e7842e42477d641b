#include <cctype>

#include "blowchern/gradedpoly.hpp"

namespace blowchern {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := ('+'|'-') unary | power
// power  := atom ('^' integer)?
// atom   := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const TablePtr& table) : text_(text), table_(table) {}

  GradedPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    GradedPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
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

  GradedPoly expr() {
    GradedPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  GradedPoly term() {
    GradedPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        GradedPoly den = unary();
        if (den.is_zero()) fail("division by zero");
        if (den.max_degree() != 0) fail("division by a non-constant");
        acc *= Rational(1) / den.constant_term();
      } else {
        return acc;
      }
    }
  }

  GradedPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_expr();
  }

  GradedPoly power_expr() {
    GradedPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      return power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  GradedPoly atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GradedPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return GradedPoly::constant(table_, Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (!table_->find(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return GradedPoly::variable(table_, name);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const TablePtr& table_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_poly(std::string_view text, const TablePtr& table) {
  return Parser(text, table).parse();
}

}  // namespace blowchern
