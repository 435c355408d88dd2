#pragma once

#include "uinf/fock.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace uinf {

/// A finite-support element of the matrix algebra U^∞(V): a sparse
/// ℕ×ℕ-indexed matrix with λ-free FockVector entries. Finite support is a
/// representational restriction of the column-finite space; every element
/// handled concretely (generators, products, the counterexample family) is
/// finitely supported.
class UElement {
 public:
  using Index = std::pair<unsigned, unsigned>;  // (row k, column l)

  UElement() = default;

  /// [v]_{kl}: v placed at row k, column l. Throws for λ-dependent v.
  static UElement single(const FockVector& v, unsigned k, unsigned l);

  const std::map<Index, FockVector>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  FockVector entry(unsigned k, unsigned l) const;
  std::set<unsigned> columns() const;

  void add_entry(unsigned k, unsigned l, const FockVector& v);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement operator+(const UElement& o) const { UElement r = *this; r += o; return r; }
  UElement operator-(const UElement& o) const { UElement r = *this; r -= o; return r; }
  UElement operator-() const;
  UElement operator*(const Rational& c) const;

  bool operator==(const UElement& o) const { return entries_ == o.entries_; }
  bool operator!=(const UElement& o) const { return !(*this == o); }

  /// Canonical text form: entries by ascending (row, column), each as
  /// "[ <vector> ]{k,l}", joined with " + "; "0" when empty.
  std::string str() const;

 private:
  std::map<Index, FockVector> entries_;  // no zero entries stored
};

inline UElement operator*(const Rational& c, const UElement& a) { return a * c; }

/// u ∘_n v = Res_x (1+x)^{wt u + n} Y(u,x)v / x^{2n+2}, the spanning elements
/// of the level-n Zhu ideal O_n(V).
FockVector circ_n(const FockVector& u, const FockVector& v, unsigned n);

/// u *_n v = Σ_{m=0}^{n} (-1)^m binom(m+n,n) Res_x (1+x)^{wt u+n} Y(u,x)v / x^{n+m+1},
/// the level-n Zhu product.
FockVector star_n(const FockVector& u, const FockVector& v, unsigned n);

/// The ◇ product on U^∞(V): [u]_{km} ◇ [v]_{nl} vanishes unless m = n, and on
/// matching inner index equals
///   Σ_{m'=0}^{n} binom(-k+n-l-1, m') Res_x x^{-k+n-l-m'-1} (1+x)^l [Y((1+x)^{L(0)}u,x)v]_{kl},
/// extended bilinearly over entries.
UElement diamond(const UElement& a, const UElement& b);

/// Residue-type generator of O^∞(V):
/// Res_x x^{-k-l-p-2} (1+x)^l [Y((1+x)^{L(0)}u,x)v]_{kl}.
UElement o_infty_gen(const FockVector& u, const FockVector& v, unsigned k, unsigned l, unsigned p);

/// L-type generator of O^∞(V): [(L(-1)+L(0)+l-k)v]_{kl}.
UElement l_gen(const FockVector& v, unsigned k, unsigned l);

/// Jacobi-identity generator of Q^∞(V), for homogeneous v, k ∈ ℕ and
/// l, p, n ∈ ℤ with l+p ≥ 0:
///   Σ_{j≥0, n+p-j≥0} (-1)^j binom(p,j) [v]_{k,n+p-j} ◇ [u]_{n+p-j,l+p}
/// − Σ_{j≥0, l-n+k+p-j≥0} (-1)^{p-j} binom(p,j) [u]_{k,l-n+k+p-j} ◇ [v]_{l-n+k+p-j,l+p}
/// − Σ_{j≥0} binom(wt v+n-k-1, j) [v_{p+j}u]_{k,l+p}.
/// The j-range constraints are part of the definition and are validated
/// eagerly; throws std::invalid_argument when v is not homogeneous or l+p < 0.
UElement j_gen(const FockVector& u, const FockVector& v, unsigned k, long long l, long long p,
               long long n);

/// Moves every entry (k,l) to (k-1,l-1); throws std::domain_error if any
/// entry sits in row 0 or column 0.
UElement shift_diag(const UElement& a);

/// Spanning elements of O_n(V) up to the weight cutoff: all u ∘_n v over
/// Fock-basis pairs with wt u + wt v <= cutoff plus (L(-1)+L(0))v with
/// wt v <= cutoff, in deterministic (weight, partition) order of the
/// generating data. Exact zeros are dropped.
std::vector<FockVector> o_n_span(unsigned n, int weight_cutoff);

/// Exact rational span membership for λ-free vectors (row reduction over the
/// joint partition basis). One-sided by construction: a `true` certifies
/// membership in the span of the given generators.
bool in_span(const FockVector& target, const std::vector<FockVector>& generators);

}  // namespace uinf
