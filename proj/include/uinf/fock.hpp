#pragma once

#include "uinf/lambda_poly.hpp"
#include "uinf/partition.hpp"
#include "uinf/rational.hpp"

#include <map>
#include <string>

namespace uinf {

/// An element of the Fock module M(1,λ): a finite sparse sum of partition
/// basis monomials with LambdaPoly coefficients. λ-free vectors are exactly
/// the elements of the vertex algebra V = M(1).
class FockVector {
 public:
  FockVector() = default;

  static FockVector vacuum() { return basis(Partition()); }
  static FockVector basis(const Partition& p, const LambdaPoly& c = LambdaPoly(1));

  const std::map<Partition, LambdaPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool lambda_free() const;

  LambdaPoly coeff(const Partition& p) const;

  /// Largest Fock degree (partition size) present; 0 for the zero vector.
  int max_degree() const;
  /// Common degree of all terms, or -1 if not homogeneous (zero vector: 0).
  int homogeneous_weight() const;

  void add_term(const Partition& p, const LambdaPoly& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector operator+(const FockVector& o) const { FockVector r = *this; r += o; return r; }
  FockVector operator-(const FockVector& o) const { FockVector r = *this; r -= o; return r; }
  FockVector operator-() const;
  FockVector operator*(const LambdaPoly& c) const;
  FockVector operator*(const Rational& c) const { return *this * LambdaPoly(c); }

  /// Substitute a numeric value for λ in every coefficient.
  FockVector evaluate_at(const Rational& lambda0) const;

  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const FockVector& o) const { return !(*this == o); }

  /// Canonical text form in the element grammar, e.g.
  /// "a(-2)a(-1)|0> + -3/2 * a(-1)|0>"; "0" for the zero vector. Coefficients
  /// with genuine λ-dependence print parenthesized and are not re-parseable.
  std::string str() const;

 private:
  std::map<Partition, LambdaPoly> terms_;  // no zero coefficients stored
};

inline FockVector operator*(const Rational& c, const FockVector& v) { return v * c; }
inline FockVector operator*(const LambdaPoly& c, const FockVector& v) { return v * c; }

/// Homogeneous components keyed by Fock degree.
using WeightSplit = std::map<int, FockVector>;
WeightSplit weight_split(const FockVector& v);

/// α(0) acts on a Fock module by a fixed scalar on the highest-weight line
/// (hence on every basis monomial). The scalar distinguishes the module:
/// 0 for the adjoint module V = M(1) itself, the formal λ for the generic
/// module M(1,λ), any rational constant for a concrete numeric module.
const LambdaPoly& alpha0_vacuum();
const LambdaPoly& alpha0_formal();

/// Heisenberg mode action on M(1,·): m < 0 adjoins a part |m|, m > 0 removes
/// a part m with the commutator factor m * multiplicity, m = 0 multiplies by
/// the alpha0 scalar. The central element always acts as 1.
FockVector alpha_apply(int m, const FockVector& w, const LambdaPoly& alpha0 = alpha0_formal());

/// Vertex-operator mode v_m w for v in V (λ-free), via the free-field
/// realization: Y(a(-n1)...a(-nr)|0>, x) is the normal-ordered product of the
/// divided-power derivatives of the free boson; annihilation and zero modes
/// hit w before creation modes. Throws std::invalid_argument for λ-dependent v.
FockVector mode(const FockVector& v, long long m, const FockVector& w, const LambdaPoly& alpha0);

/// L(0): multiplies each term by its Fock degree.
FockVector l_zero(const FockVector& v);

/// L(-1)v = Res_x x^{-2} Y(v,x)|0>; raises degree by exactly one.
FockVector l_minus_one(const FockVector& v);

/// Res_x x^t (1+x)^s Y((1+x)^{L(0)} u, x) v
///   = sum_d sum_{i>=0} binom(s+d, i) * mode(u_d, t+i, v)
/// over the weight components u_d of u. The i-sum is bounded by the degree
/// bookkeeping (modes vanish once t+i >= d + deg v), never by a guessed
/// cutoff. This is the residue kernel shared by every product in the algebra.
FockVector res_kernel(const FockVector& u, const FockVector& v, long long t, long long s,
                      const LambdaPoly& alpha0);

}  // namespace uinf
