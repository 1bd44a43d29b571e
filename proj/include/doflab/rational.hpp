// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFLAB_RATIONAL_HPP
#define DOFLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doflab {

/// Exact arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class that turns division
/// by zero into an exception instead of a SIGFPE.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)),
                       mpz_class(static_cast<long>(den)));
    value_.canonicalize();
  }

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p/q", "p" or "-p/q". Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
      std::string s(part);
      std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (s.size() == start) throw std::invalid_argument("bad rational: " + std::string(text));
      for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
          throw std::invalid_argument("bad rational: " + std::string(text));
      if (s[0] == '+') s.erase(0, 1);
      return mpz_class(s, 10);
    };
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(text)));
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(mpq_class(num, den));
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or just "p" when the denominator is one.
  std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

using RationalVector = std::vector<Rational>;

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

inline std::string to_string(const RationalVector& v, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

/// Parses a comma-separated list of rationals ("12/5,4/5").
inline RationalVector parse_vector(std::string_view text) {
  RationalVector out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(Rational::parse(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace doflab

#endif  // DOFLAB_RATIONAL_HPP
