#pragma once

#include "uinf/fock.hpp"
#include "uinf/uelement.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace uinf {

/// Key of a Gr class: level n together with a partition of n (the canonical
/// representative α(-i1)...α(-ij) applied to the highest-weight vector).
struct GrKey {
  int level = 0;
  Partition partition;
  auto operator<=>(const GrKey&) const = default;
};

/// An element of ⊕_n Gr_n(M(1,λ)) = ⊕_n Ω_n/Ω_{n-1} with formal highest
/// weight: finitely many (level, partition-of-level) classes with LambdaPoly
/// coefficients.
class GrVector {
 public:
  GrVector() = default;

  static GrVector cls(int level, const Partition& p, const LambdaPoly& c = LambdaPoly(1));

  const std::map<GrKey, LambdaPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LambdaPoly coeff(int level, const Partition& p) const;

  void add_term(int level, const Partition& p, const LambdaPoly& c);

  GrVector& operator+=(const GrVector& o);
  GrVector operator+(const GrVector& o) const { GrVector r = *this; r += o; return r; }
  GrVector operator-(const GrVector& o) const;
  GrVector operator*(const LambdaPoly& c) const;

  GrVector evaluate_at(const Rational& lambda0) const;

  bool operator==(const GrVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const GrVector& o) const { return !(*this == o); }

  /// e.g. "2 * [a(-1)a(-1)|0>]_2 + (L^2) * [a(-2)|0>]_2"; "0" when zero.
  std::string str() const;

 private:
  std::map<GrKey, LambdaPoly> terms_;
};

inline GrVector operator*(const LambdaPoly& c, const GrVector& x) { return x * c; }

/// Basis classes of Gr_n(M(1,λ)): one class per partition of n, coefficient 1,
/// in canonical partition order.
std::vector<GrVector> gr_basis(int n);

/// ϑ-action of a finite-support UElement on Gr(M(1,λ)):
///   ϑ([v]_{kl}) [w]_n = δ_{ln} [Res_x x^{l-k-1} Y(x^{L(0)}v, x) w]_k,
/// i.e. the single mode (v_d)_{d-1+l-k} per weight component v_d, applied to
/// the level-l representative with α(0) acting by the alpha0 scalar (formal λ
/// by default), then reduced mod Ω_{k-1} by keeping the degree-k part.
GrVector theta_apply(const UElement& a, const GrVector& x,
                     const LambdaPoly& alpha0 = alpha0_formal());

}  // namespace uinf
