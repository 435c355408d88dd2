#pragma once

#include "uinf/fock.hpp"
#include "uinf/oracle.hpp"
#include "uinf/uelement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uinf {

struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = false;
  std::optional<std::string> detail;  // witness text, present when !passed
};

/// Both Jacobi-identity sides applied to a target vector of M(1,λ):
/// lhs = Σ_i binom(m,i) (a_{l+i}b)_{m+n-i} w,
/// rhs = Σ_i (-1)^i binom(l,i) a_{m+l-i} b_{n+i} w
///     - Σ_i (-1)^{l+i} binom(l,i) b_{n+l-i} a_{m+i} w,
/// with the inner product a_{l+i}b taken in V and the outer modes acting on
/// the module with formal λ. All sums terminate by degree bookkeeping.
struct JacobiSides {
  FockVector lhs;
  FockVector rhs;
};
JacobiSides jacobi_sides(const FockVector& a, const FockVector& b, long long l, long long m,
                         long long n, const FockVector& w);

/// E_n = [α(-1)𝟏]_{nn} ◇ [α(-1)𝟏]_{nn} − [α(-1)²𝟏]_{nn} + 2n[𝟏]_{nn},
/// the member of Q^∞(M(1)) whose diagonal shift leaves Q^∞(M(1)).
UElement counterexample_element(unsigned n);

std::vector<CheckResult> check_jacobi(int max_weight = 3, int index_range = 2,
                                      int max_target_degree = 4);
std::vector<CheckResult> check_diamond_star(unsigned nmax = 3, int max_weight = 3);
std::vector<CheckResult> check_prop_mult(int max_weight = 3, unsigned max_index = 3);
std::vector<CheckResult> check_prop_mult0(int max_weight = 3, unsigned max_index = 3);
std::vector<CheckResult> check_theorem_main();
std::vector<CheckResult> check_counterexample(unsigned nmax = 4);
std::vector<CheckResult> check_a1_heis();

/// Named suite dispatcher for the CLI: one of jacobi, diamond-star, mult,
/// theorem-main, counterexample, a1-heis, all. Throws std::invalid_argument
/// for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite);

std::vector<std::string> suite_names();

}  // namespace uinf
