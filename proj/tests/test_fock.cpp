#include "uinf/fock.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace uinf;

namespace {

FockVector mono(std::vector<int> parts) { return FockVector::basis(Partition(std::move(parts))); }

const FockVector kOne = FockVector::vacuum();

}  // namespace

TEST_CASE("alpha_apply matches the Heisenberg relations") {
  // commutator oracle: [α(m), α(n)] = m δ_{m+n,0} (central charge 1)
  const auto samples = testing_oracles::fock_basis_up_to(3);
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n)
      for (const FockVector& w : samples) {
        FockVector lhs = alpha_apply(m, alpha_apply(n, w)) - alpha_apply(n, alpha_apply(m, w));
        FockVector expected = (m + n == 0) ? w * Rational(m) : FockVector();
        CHECK(lhs == expected);
      }
}

TEST_CASE("alpha_apply base cases") {
  CHECK(alpha_apply(1, mono({1})) == kOne);
  CHECK(alpha_apply(-2, kOne) == mono({2}));
  // α(0) on the generic module multiplies by the formal λ
  CHECK(alpha_apply(0, mono({2, 1})) == mono({2, 1}) * alpha0_formal());
  // α(0) on the adjoint module acts as zero
  CHECK(alpha_apply(0, mono({2, 1}), alpha0_vacuum()).is_zero());
  CHECK(alpha_apply(1, mono({2})).is_zero());
  CHECK(alpha_apply(2, mono({2, 2})) == mono({2}) * Rational(4));
}

TEST_CASE("mode of the vacuum is the identity field") {
  for (const FockVector& w : testing_oracles::fock_basis_up_to(4)) {
    CHECK(mode(kOne, -1, w, alpha0_formal()) == w);
    for (long long m = -3; m <= 2; ++m) {
      if (m == -1) continue;
      CHECK(mode(kOne, m, w, alpha0_formal()).is_zero());
    }
  }
}

TEST_CASE("mode of a(-1)|0> is the free boson field") {
  for (long long m = -3; m <= 3; ++m)
    for (const FockVector& w : testing_oracles::fock_basis_up_to(3)) {
      CHECK(mode(mono({1}), m, w, alpha0_formal()) ==
            alpha_apply(static_cast<int>(m), w, alpha0_formal()));
      CHECK(mode(mono({1}), m, w, alpha0_vacuum()) ==
            alpha_apply(static_cast<int>(m), w, alpha0_vacuum()));
    }
}

TEST_CASE("zero mode of a(-1)^2|0> is the graded number operator") {
  // on V: 2 L(0) on weight-1 vectors
  CHECK(mode(mono({1, 1}), 1, mono({1}), alpha0_vacuum()) == mono({1}) * Rational(2));
  // on M(1,λ): picks up α(0)^2 = λ^2
  LambdaPoly lam = alpha0_formal();
  CHECK(mode(mono({1, 1}), 1, mono({1}), lam) == mono({1}) * (lam * lam + LambdaPoly(2)));
}

TEST_CASE("mode rejects λ-dependent field vectors") {
  FockVector bad = mono({1}) * alpha0_formal();
  CHECK_THROWS_AS(mode(bad, 0, kOne, alpha0_formal()), std::invalid_argument);
}

TEST_CASE("l_zero multiplies by Fock degree") {
  CHECK(l_zero(mono({1})) == mono({1}));
  CHECK(l_zero(kOne).is_zero());
  CHECK(l_zero(mono({2, 1})) == mono({2, 1}) * Rational(3));
}

TEST_CASE("l_minus_one base cases") {
  CHECK(l_minus_one(mono({1})) == mono({2}));
  CHECK(l_minus_one(kOne).is_zero());
  for (int n = 1; n <= 4; ++n)
    CHECK(l_minus_one(mono({n})) == mono({n + 1}) * Rational(n));
  CHECK(l_minus_one(mono({1, 1})) == mono({2, 1}) * Rational(2));
}

TEST_CASE("L(-1)-derivative property of modes") {
  for (const FockVector& u : testing_oracles::fock_basis_up_to(3))
    for (const FockVector& w : testing_oracles::fock_basis_up_to(3))
      for (long long m = -3; m <= 3; ++m)
        CHECK(mode(l_minus_one(u), m, w, alpha0_formal()) ==
              mode(u, m - 1, w, alpha0_formal()) * Rational(-m));
}

TEST_CASE("L(0)-bracket: operator weight bookkeeping") {
  for (const FockVector& a : testing_oracles::fock_basis_up_to(3)) {
    const int d = a.homogeneous_weight();
    for (const FockVector& w : testing_oracles::fock_basis_up_to(3))
      for (long long m = -3; m <= 3; ++m) {
        FockVector aw = mode(a, m, w, alpha0_vacuum());
        CHECK(l_zero(aw) - mode(a, m, l_zero(w), alpha0_vacuum()) ==
              aw * Rational(d - m - 1));
      }
  }
}

TEST_CASE("modes shift Fock degree exactly by wt a - m - 1") {
  for (const FockVector& a : testing_oracles::fock_basis_up_to(3)) {
    const int d = a.homogeneous_weight();
    for (const FockVector& w : testing_oracles::fock_basis_up_to(4)) {
      const int e = w.homogeneous_weight();
      for (long long m = -3; m <= 3; ++m) {
        FockVector r = mode(a, m, w, alpha0_formal());
        if (!r.is_zero()) CHECK(r.homogeneous_weight() == e + d - m - 1);
      }
    }
  }
}

TEST_CASE("creation property") {
  for (const FockVector& a : testing_oracles::fock_basis_up_to(4)) {
    CHECK(mode(a, -1, kOne, alpha0_vacuum()) == a);
    for (long long n = a.homogeneous_weight(); n <= a.homogeneous_weight() + 3; ++n)
      CHECK(mode(a, n, kOne, alpha0_vacuum()).is_zero());
  }
}

TEST_CASE("res_kernel base cases") {
  for (long long s = 0; s <= 3; ++s) {
    CHECK(res_kernel(kOne, mono({2, 1}), -1, s, alpha0_vacuum()) == mono({2, 1}));
    FockVector lam_dep = mono({1}) * alpha0_formal();
    CHECK(res_kernel(kOne, lam_dep, -1, s, alpha0_formal()) == lam_dep);
  }
  CHECK(res_kernel(mono({1}), mono({1}), -1, 0, alpha0_vacuum()) == mono({1, 1}));
  CHECK(res_kernel(mono({1}), mono({1}), 1, 0, alpha0_vacuum()) == kOne);
}

TEST_CASE("res_kernel agrees with the series-expansion oracle") {
  const auto basis = testing_oracles::fock_basis_up_to(3);
  for (const FockVector& u : basis)
    for (const FockVector& v : basis)
      for (long long t = -4; t <= 2; ++t)
        for (long long s = 0; s <= 2; ++s) {
          CHECK(res_kernel(u, v, t, s, alpha0_vacuum()) ==
                testing_oracles::series_res_kernel(u, v, t, s, alpha0_vacuum()));
        }
  // non-homogeneous u goes through the same weight-component split
  FockVector u = mono({2}) + mono({1, 1}) * Rational(-3) + kOne;
  FockVector v = mono({1}) + mono({3});
  for (long long t = -4; t <= 2; ++t)
    CHECK(res_kernel(u, v, t, 1, alpha0_formal()) ==
          testing_oracles::series_res_kernel(u, v, t, 1, alpha0_formal()));
}

TEST_CASE("weight_split recombines to the original vector") {
  FockVector v = mono({2, 1}) * Rational(2) + mono({1}) + kOne * Rational(-5) + mono({3});
  WeightSplit split = weight_split(v);
  FockVector back;
  for (const auto& [d, comp] : split) {
    CHECK(comp.homogeneous_weight() == d);
    back += comp;
  }
  CHECK(back == v);
}

TEST_CASE("evaluate_at substitutes λ in every coefficient") {
  LambdaPoly lam = alpha0_formal();
  FockVector v = mono({1}) * (lam * lam + LambdaPoly(1)) + mono({2}) * lam;
  FockVector at2 = v.evaluate_at(Rational(2));
  CHECK(at2 == mono({1}) * Rational(5) + mono({2}) * Rational(2));
  CHECK(v.evaluate_at(Rational(0)) == mono({1}));
}
