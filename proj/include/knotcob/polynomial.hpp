#pragma once

#include <cctype>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "knotcob/error.hpp"
#include "knotcob/integer.hpp"

namespace knotcob {

/// Sparse integer coefficients indexed by exponent, exponents >= 0.
using CoefficientMap = std::map<int, Int>;

/// Integer polynomial in t with no constant term. Zero coefficients are never stored.
class LaurentFreePolynomial {
 public:
  LaurentFreePolynomial() = default;

  static LaurentFreePolynomial monomial(Int coefficient, int exponent) {
    LaurentFreePolynomial p;
    p.add_term(coefficient, exponent);
    return p;
  }

  /// Rejects a nonzero constant term.
  static LaurentFreePolynomial from_terms(const CoefficientMap& terms) {
    LaurentFreePolynomial p;
    for (auto [e, c] : terms) {
      if (e == 0) {
        if (c != 0) throw Error(ErrorCode::InvalidArgument, "polynomial has a nonzero constant term");
        continue;
      }
      p.add_term(c, e);
    }
    return p;
  }

  void add_term(Int coefficient, int exponent) {
    if (exponent < 1) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
    if (coefficient == 0) return;
    Int& slot = terms_[exponent];
    slot = checked_add(slot, coefficient);
    if (slot == 0) terms_.erase(exponent);
  }

  const std::map<int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Value of d/dt at t = 1.
  Int derivative_at_one() const {
    Int total = 0;
    for (auto [e, c] : terms_) total = checked_add(total, checked_mul(e, c));
    return total;
  }

  CoefficientMap coefficients() const { return CoefficientMap(terms_.begin(), terms_.end()); }

  LaurentFreePolynomial operator-() const {
    LaurentFreePolynomial r;
    for (auto [e, c] : terms_) r.terms_[e] = checked_neg(c);
    return r;
  }

  LaurentFreePolynomial& operator+=(const LaurentFreePolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(c, e);
    return *this;
  }
  LaurentFreePolynomial& operator-=(const LaurentFreePolynomial& o) { return *this += -o; }

  friend LaurentFreePolynomial operator+(LaurentFreePolynomial a, const LaurentFreePolynomial& b) { return a += b; }
  friend LaurentFreePolynomial operator-(LaurentFreePolynomial a, const LaurentFreePolynomial& b) { return a -= b; }
  friend LaurentFreePolynomial operator*(Int k, const LaurentFreePolynomial& p) {
    LaurentFreePolynomial r;
    for (auto [e, c] : p.terms_) r.add_term(checked_mul(k, c), e);
    return r;
  }

  bool operator==(const LaurentFreePolynomial&) const = default;

  /// Monomials in increasing exponent order, e.g. "2t^3 - t^5"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [e, c] : terms_) {
      Int mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) out += std::to_string(mag);
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
      first = false;
    }
    return out;
  }

 private:
  std::map<int, Int> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentFreePolynomial& p) { return os << p.to_string(); }

/// Parses sums of monomials such as "2t^3 - t^5 + 1". Constants are allowed here;
/// LaurentFreePolynomial::from_terms rejects them.
inline CoefficientMap parse_polynomial(std::string_view text) {
  CoefficientMap out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](Int& value) {
    std::size_t start = i;
    value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = checked_add(checked_mul(value, 10), text[i] - '0');
      ++i;
    }
    return i > start;
  };
  skip();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    Int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    Int coefficient = 0;
    const bool has_coefficient = read_int(coefficient);
    if (!has_coefficient) coefficient = 1;
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    int exponent = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        Int e = 0;
        if (!read_int(e)) fail("missing exponent");
        if (e > 1'000'000) fail("exponent too large");
        exponent = static_cast<int>(e);
      }
    } else if (!has_coefficient) {
      fail("expected a term");
    }
    Int& slot = out[exponent];
    slot = checked_add(slot, checked_mul(sign, coefficient));
    if (slot == 0) out.erase(exponent);
    first = false;
  }
  return out;
}

/// Pair (p+, p-) arises from some knot iff both constant terms vanish and p+'(1) = p-'(1).
inline bool realizable_pair_check(const CoefficientMap& p_plus, const CoefficientMap& p_minus) {
  auto constant = [](const CoefficientMap& p) {
    auto it = p.find(0);
    return it == p.end() ? Int{0} : it->second;
  };
  auto derivative = [](const CoefficientMap& p) {
    Int total = 0;
    for (auto [e, c] : p) total = checked_add(total, checked_mul(e, c));
    return total;
  };
  return constant(p_plus) == 0 && constant(p_minus) == 0 && derivative(p_plus) == derivative(p_minus);
}

inline bool realizable_pair_check(const LaurentFreePolynomial& p_plus, const LaurentFreePolynomial& p_minus) {
  return p_plus.derivative_at_one() == p_minus.derivative_at_one();
}

}  // namespace knotcob
