// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYTUTTE_BIPOLY_HPP
#define POLYTUTTE_BIPOLY_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polytutte/error.hpp"

namespace polytutte {

using Integer = boost::multiprecision::cpp_int;

// Exponent pair of a monomial x^x * y^y. Negative values are allowed.
struct Exponent {
  int x = 0;
  int y = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  int total() const noexcept { return x + y; }
};

// Canonical term order: total degree descending, then x-exponent descending.
// Two distinct exponents never compare equal under this order.
struct CanonicalOrder {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.x > b.x;
  }
};

enum class Axis { kX, kY };

// Sparse bivariate Laurent polynomial with arbitrary-precision integer
// coefficients. No stored coefficient is ever zero, so equality of two values
// is equality of their term maps.
class BiPoly {
 public:
  using TermMap = std::map<Exponent, Integer, CanonicalOrder>;

  BiPoly() = default;

  static BiPoly constant(const Integer& c) { return monomial(c, 0, 0); }

  static BiPoly monomial(const Integer& c, int i, int j) {
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
  }

  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  // x + y - 1, the factor every polymatroid Tutte polynomial carries.
  static BiPoly x_plus_y_minus_one() { return x() + y() - constant(1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // Adds c * x^i y^j in place.
  void add_term(Exponent e, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  BiPoly& operator-=(const BiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  BiPoly& operator*=(const BiPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  friend BiPoly operator-(const BiPoly& a) {
    BiPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
      }
    }
    return r;
  }

  friend BiPoly operator*(BiPoly a, const Integer& s) {
    if (s.is_zero()) return BiPoly();
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Multiplies by the monomial x^i y^j.
  BiPoly shifted(int i, int j) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.x + i, e.y + j}, c);
    return r;
  }

  BiPoly pow(unsigned k) const {
    BiPoly result = constant(1);
    BiPoly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  bool has_negative_exponent() const noexcept {
    for (const auto& [e, c] : terms_) {
      if (e.x < 0 || e.y < 0) return true;
    }
    return false;
  }

  // Largest total degree of a stored term; 0 for the zero polynomial.
  int total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.total();
  }

  int max_exponent(Axis axis) const noexcept {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int v = axis == Axis::kX ? e.x : e.y;
      if (first || v > m) m = v;
      first = false;
    }
    return m;
  }

  // Sum of all coefficients, i.e. the value at (1, 1).
  Integer value_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

 private:
  TermMap terms_;
};

// Substitutes the value 1 for the given variable.
inline BiPoly at_one(const BiPoly& p, Axis axis) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    r.add_term(axis == Axis::kX ? Exponent{0, e.y} : Exponent{e.x, 0}, c);
  }
  return r;
}

// Computes v^n * p(v^{-1}) in the given variable v, leaving the other variable
// untouched. Every exponent of v must lie in [0, n].
inline BiPoly reversed(const BiPoly& p, Axis axis, int n) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    int v = axis == Axis::kX ? e.x : e.y;
    if (v < 0 || v > n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "reversal degree " + std::to_string(n) +
                      " does not cover exponent " + std::to_string(v));
    }
    r.add_term(axis == Axis::kX ? Exponent{n - v, e.y} : Exponent{e.x, n - v}, c);
  }
  return r;
}

// p(y, x).
inline BiPoly swap_variables(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({e.y, e.x}, c);
  return r;
}

// Dividing by the monic (in x) polynomial x + (y - 1) leaves the remainder
// p(1 - y, y), so divisibility is the vanishing of that univariate polynomial.
inline bool divisible_by_x_plus_y_minus_1(const BiPoly& p) {
  if (p.has_negative_exponent()) {
    throw Error(ErrorKind::kInvalidArgument,
                "divisibility test needs a polynomial without negative exponents");
  }
  const BiPoly one_minus_y = BiPoly::constant(1) - BiPoly::y();
  BiPoly remainder;
  for (const auto& [e, c] : p.terms()) {
    remainder += one_minus_y.pow(static_cast<unsigned>(e.x)).shifted(0, e.y) * c;
  }
  return remainder.is_zero();
}

namespace detail {

inline std::string monomial_text(const Exponent& e) {
  std::string s;
  auto factor = [&s](char var, int k) {
    if (k == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (k != 1) s += '^' + std::to_string(k);
  };
  factor('x', e.x);
  factor('y', e.y);
  return s;
}

}  // namespace detail

// Canonical text: "x^2 + 2*x*y + y^2 - x - y"; the zero polynomial is "0".
inline std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = detail::monomial_text(e);
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
  return os << to_string(p);
}

// Parses the canonical text form (and any reordering of it). Whitespace is
// ignored; exponents may be negative ("x*y^-4").
inline BiPoly parse_bipoly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&text](const std::string& why) -> Error {
    return Error(ErrorKind::kParse,
                 "bad polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");

  auto parse_int = [&](std::string_view digits) -> long long {
    if (digits.empty()) throw fail("missing exponent");
    std::size_t pos = 0;
    bool neg = false;
    if (digits[0] == '-' || digits[0] == '+') {
      neg = digits[0] == '-';
      pos = 1;
    }
    if (pos == digits.size()) throw fail("missing exponent digits");
    long long v = 0;
    for (; pos < digits.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(digits[pos]))) {
        throw fail("non-digit in exponent");
      }
      v = v * 10 + (digits[pos] - '0');
      if (v > 1'000'000) throw fail("exponent too large");
    }
    return neg ? -v : v;
  };

  BiPoly result;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw fail("expected sign");
    }
    std::size_t end = i;
    while (end < s.size() &&
           !((s[end] == '+' || s[end] == '-') && end > i && s[end - 1] != '^')) {
      ++end;
    }
    std::string_view term(s.data() + i, end - i);
    if (term.empty()) throw fail("empty term");

    Integer coeff = 1;
    Exponent e;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      if (star == std::string_view::npos) star = term.size();
      std::string_view factor = term.substr(start, star - start);
      if (factor.empty()) throw fail("empty factor");
      if (factor[0] == 'x' || factor[0] == 'y') {
        int k = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw fail("expected '^'");
          k = static_cast<int>(parse_int(factor.substr(2)));
        }
        (factor[0] == 'x' ? e.x : e.y) += k;
      } else {
        for (char ch : factor) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw fail("bad coefficient");
          }
        }
        coeff *= Integer(std::string(factor));
      }
      start = star + 1;
    }
    result.add_term(e, negative ? Integer(-coeff) : coeff);
    i = end;
  }
  return result;
}

}  // namespace polytutte

#endif  // POLYTUTTE_BIPOLY_HPP
