#pragma once

#include "uinf/rational.hpp"

#include <string>
#include <vector>

namespace uinf {

/// Univariate polynomial in the formal highest weight λ, with exact rational
/// coefficients. Degree-0 instances are "λ-free"; the zero polynomial has no
/// stored coefficients.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(const Rational& c) { coeffs_.push_back(c); trim(); }  // NOLINT(google-explicit-constructor)
  LambdaPoly(long long c) : LambdaPoly(Rational(c)) {}             // NOLINT(google-explicit-constructor)

  static LambdaPoly lambda() { return monomial(1, 1); }

  static LambdaPoly monomial(unsigned degree, const Rational& c) {
    LambdaPoly p;
    if (c != 0) {
      p.coeffs_.assign(degree + 1, Rational(0));
      p.coeffs_[degree] = c;
    }
    return p;
  }

  /// Coefficients by ascending degree; trailing zeros are trimmed.
  static LambdaPoly from_coeffs(std::vector<Rational> coeffs) {
    LambdaPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_formal_lambda() const {
    return coeffs_.size() == 2 && coeffs_[0] == 0 && coeffs_[1] == 1;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(unsigned degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) { return *this += -o; }

  LambdaPoly operator+(const LambdaPoly& o) const { LambdaPoly r = *this; r += o; return r; }
  LambdaPoly operator-(const LambdaPoly& o) const { LambdaPoly r = *this; r -= o; return r; }

  LambdaPoly operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LambdaPoly operator*(const LambdaPoly& o) const {
    LambdaPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
  }
  LambdaPoly& operator*=(const LambdaPoly& o) { *this = *this * o; return *this; }

  LambdaPoly operator*(const Rational& c) const {
    LambdaPoly r;
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  LambdaPoly pow(unsigned e) const {
    LambdaPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Rational evaluate_at(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const LambdaPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

  /// Canonical text form, highest degree first, λ printed as "L":
  /// "L^2 - 2*L + 3/2", "0" for zero.
  std::string str() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline LambdaPoly operator*(const Rational& c, const LambdaPoly& p) { return p * c; }

}  // namespace uinf
