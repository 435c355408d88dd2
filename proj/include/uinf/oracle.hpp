#pragma once

#include "uinf/grmod.hpp"
#include "uinf/uelement.hpp"

#include <optional>
#include <vector>

namespace uinf {

// Q^∞(M(1)) membership is decidable on finite-support elements by checking
// the ϑ-action on Gr(M(1,λ)) with formal highest weight λ, over the columns
// in the element's support. Why this single formal family suffices:
//
//   * Every lower-bounded generalized M(1)-module W decomposes as
//     M(1) ⊗ Ω(W) over the Heisenberg algebra, with Ω(W) the space killed by
//     the positive modes, and α(0) restricting to an operator T on Ω(W) that
//     commutes with all mode actions (T need not be semisimple).
//   * Ω_n(W) is spanned by partition monomials of size ≤ n tensored with
//     Ω(W), so the Gr_l(W) basis classes are partition monomials of size l
//     applied to Ω(W).
//   * The ϑ-image of a finite-support element on such a class is the formal-λ
//     image computed here with λ replaced by T: the computation is a fixed
//     ℚ[λ]-linear combination of partition monomials, with λ-powers produced
//     only by α(0)-occurrences.
//   * If every formal image vanishes identically, substituting the commuting
//     operator T for λ still gives zero (a polynomial identity survives
//     substitution of a commuting operator), so the element kills Gr(W) for
//     every W: it is a member.
//   * Conversely a nonzero image has some nonzero polynomial coefficient
//     P(λ); choosing a rational non-root λ0 gives the one-dimensional
//     Ω(W) = ℂ with α(0) = λ0, a concrete module where the element acts
//     nonzero: not a member, with the evaluated image as an explicit witness.
//
// This argument rests on the rank-one module classification and does not
// transfer to vertex algebras without such a classification.

/// A concrete non-membership certificate: the first basis class (smallest
/// column, then canonical partition order) with nonzero ϑ-image.
struct Witness {
  unsigned column = 0;
  Partition partition;
  GrVector image;
};

struct MembershipReport {
  bool member = true;
  std::optional<Witness> witness;          // present iff !member
  std::vector<unsigned> checked_columns;   // columns examined, ascending
};

/// Decides membership of a finite-support element in Q^∞(M(1)).
MembershipReport in_qinf(const UElement& a);

struct DiagonalShiftReport {
  MembershipReport original;
  MembershipReport shifted;
  /// The property is conditional on membership of the original element.
  bool satisfies() const { return !original.member || shifted.member; }
};

/// Runs the oracle on `a` and on shift_diag(a); requires every entry of `a`
/// in rows and columns >= 1 (shift_diag's error propagates).
DiagonalShiftReport diagonal_shift_report(const UElement& a);

}  // namespace uinf
