#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "sext/semigroup.hpp"

namespace sext {

// Constructor expressions: C<n> cyclic group, L<n> chain semilattice,
// N<n> null semigroup, D<n> dihedral group of order n, V the two-generator
// free semilattice. '+' is ordered disjoint union, 'x' direct product
// (binds tighter), parentheses group, and C(3) means the same as C3.
class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  FiniteSemigroup parse() {
    FiniteSemigroup s = parse_union();
    skip_ws();
    if (pos_ != text_.size())
      throw std::invalid_argument("trailing content in expression: " + text_);
    return s;
  }

 private:
  FiniteSemigroup parse_union() {
    FiniteSemigroup s = parse_product();
    while (peek() == '+') {
      ++pos_;
      s = disjoint_ordered_union(s, parse_product());
    }
    return s;
  }

  FiniteSemigroup parse_product() {
    FiniteSemigroup s = parse_atom();
    while (peek() == 'x' || peek() == '*') {
      ++pos_;
      s = direct_product(s, parse_atom());
    }
    return s;
  }

  FiniteSemigroup parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw std::invalid_argument("unexpected end of expression: " + text_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FiniteSemigroup s = parse_union();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw std::invalid_argument("missing ')' in expression: " + text_);
      ++pos_;
      return s;
    }
    if (c == 'V') {
      ++pos_;
      return make_v_semilattice();
    }
    if (c == 'C' || c == 'L' || c == 'N' || c == 'D') {
      ++pos_;
      int n = parse_number();
      switch (c) {
        case 'C': return make_cyclic(n);
        case 'L': return make_linear_semilattice(n);
        case 'N': return make_null(n);
        default:
          if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("dihedral order must be even and >= 2");
          return make_dihedral(n / 2);
      }
    }
    throw std::invalid_argument(std::string("unexpected '") + c +
                                "' in expression: " + text_);
  }

  int parse_number() {
    skip_ws();
    bool paren = false;
    if (pos_ < text_.size() && text_[pos_] == '(') { paren = true; ++pos_; skip_ws(); }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw std::invalid_argument("expected a number in expression: " + text_);
    int n = std::stoi(text_.substr(start, pos_ - start));
    if (paren) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw std::invalid_argument("missing ')' in expression: " + text_);
      ++pos_;
    }
    return n;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

inline FiniteSemigroup parse_semigroup_expr(const std::string& text) {
  return ExprParser(text).parse();
}

}  // namespace sext
