#include "uinf/props.hpp"

#include "uinf/grmod.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace uinf {

namespace {

constexpr std::uint64_t kComboSeed = 0x5eed01u;

std::vector<FockVector> fock_basis_up_to(int max_weight) {
  std::vector<FockVector> basis;
  for (int d = 0; d <= max_weight; ++d)
    for (const Partition& p : partitions_of(d)) basis.push_back(FockVector::basis(p));
  return basis;
}

FockVector alpha_monomial(std::initializer_list<int> parts) {
  return FockVector::basis(Partition(std::vector<int>(parts)));
}

void record(std::vector<CheckResult>& out, std::string name, std::string params, bool passed,
            std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.parameters = std::move(params);
  r.passed = passed;
  if (!passed) r.detail = detail.empty() ? std::string("assertion failed") : std::move(detail);
  out.push_back(std::move(r));
}

std::string membership_detail(const MembershipReport& rep) {
  if (rep.member) return "member";
  std::ostringstream os;
  os << "witness at column " << rep.witness->column << ", partition "
     << rep.witness->partition.str() << ", image " << rep.witness->image.str();
  return os.str();
}

}  // namespace

JacobiSides jacobi_sides(const FockVector& a, const FockVector& b, long long l, long long m,
                         long long n, const FockVector& w) {
  const LambdaPoly& lam = alpha0_formal();
  const long long wa = a.max_degree();
  const long long wb = b.max_degree();
  const long long ww = w.max_degree();

  FockVector lhs;
  {
    long long i_hi = wa + wb - l - 1;  // a_{l+i}b dies past this
    if (m >= 0) i_hi = std::min(i_hi, m);
    for (long long i = 0; i <= i_hi; ++i) {
      Rational c = binom(m, i);
      if (c == 0) continue;
      FockVector inner = mode(a, l + i, b, alpha0_vacuum());
      if (inner.is_zero()) continue;
      lhs += mode(inner, m + n - i, w, lam) * c;
    }
  }

  FockVector rhs;
  {
    long long i_hi = wb + ww - n - 1;  // b_{n+i}w dies past this
    if (l >= 0) i_hi = std::min(i_hi, l);
    for (long long i = 0; i <= i_hi; ++i) {
      Rational c = parity_sign(i) * binom(l, i);
      if (c == 0) continue;
      FockVector inner = mode(b, n + i, w, lam);
      if (inner.is_zero()) continue;
      rhs += mode(a, m + l - i, inner, lam) * c;
    }
    i_hi = wa + ww - m - 1;  // a_{m+i}w dies past this
    if (l >= 0) i_hi = std::min(i_hi, l);
    for (long long i = 0; i <= i_hi; ++i) {
      Rational c = parity_sign(l + i) * binom(l, i);
      if (c == 0) continue;
      FockVector inner = mode(a, m + i, w, lam);
      if (inner.is_zero()) continue;
      rhs -= mode(b, n + l - i, inner, lam) * c;
    }
  }
  return JacobiSides{std::move(lhs), std::move(rhs)};
}

UElement counterexample_element(unsigned n) {
  if (n == 0) throw std::invalid_argument("counterexample_element: n must be positive");
  const FockVector u = alpha_monomial({1});
  const FockVector y = alpha_monomial({1, 1});
  UElement e = diamond(UElement::single(u, n, n), UElement::single(u, n, n));
  e -= UElement::single(y, n, n);
  e += UElement::single(FockVector::vacuum(), n, n) * Rational(2LL * n);
  return e;
}

std::vector<CheckResult> check_jacobi(int max_weight, int index_range, int max_target_degree) {
  std::vector<CheckResult> out;
  const auto ab_basis = fock_basis_up_to(max_weight);
  const auto targets = fock_basis_up_to(max_target_degree);
  for (const FockVector& a : ab_basis) {
    for (const FockVector& b : ab_basis) {
      bool passed = true;
      std::string detail;
      for (long long l = -index_range; l <= index_range && passed; ++l)
        for (long long m = -index_range; m <= index_range && passed; ++m)
          for (long long n = -index_range; n <= index_range && passed; ++n)
            for (const FockVector& w : targets) {
              JacobiSides sides = jacobi_sides(a, b, l, m, n, w);
              if (sides.lhs != sides.rhs) {
                passed = false;
                std::ostringstream os;
                os << "mismatch at l=" << l << " m=" << m << " n=" << n << " target " << w.str()
                   << ": lhs = " << sides.lhs.str() << ", rhs = " << sides.rhs.str();
                detail = os.str();
                break;
              }
            }
      std::ostringstream params;
      params << "a=" << a.str() << "; b=" << b.str() << "; |l|,|m|,|n|<=" << index_range
             << "; targets deg<=" << max_target_degree;
      record(out, "jacobi", params.str(), passed, detail);
    }
  }
  return out;
}

std::vector<CheckResult> check_diamond_star(unsigned nmax, int max_weight) {
  std::vector<CheckResult> out;
  const auto basis = fock_basis_up_to(max_weight);
  for (unsigned n = 0; n <= nmax; ++n) {
    bool passed = true;
    std::string detail;
    for (const FockVector& u : basis) {
      for (const FockVector& v : basis) {
        UElement lhs = diamond(UElement::single(u, n, n), UElement::single(v, n, n));
        UElement rhs = UElement::single(star_n(u, v, n), n, n);
        if (lhs != rhs) {
          passed = false;
          std::ostringstream os;
          os << "u=" << u.str() << " v=" << v.str() << ": diamond gives " << lhs.str()
             << " but *_n gives " << rhs.str();
          detail = os.str();
          break;
        }
      }
      if (!passed) break;
    }
    std::ostringstream params;
    params << "n=" << n << "; u,v weight<=" << max_weight;
    record(out, "diamond-star", params.str(), passed, detail);
  }
  return out;
}

std::vector<CheckResult> check_prop_mult(int max_weight, unsigned max_index) {
  std::vector<CheckResult> out;
  const auto basis = fock_basis_up_to(max_weight);
  for (unsigned k = 1; k <= max_index; ++k)
    for (unsigned i = 1; i <= max_index; ++i)
      for (unsigned l = 1; l <= max_index; ++l) {
        bool passed = true;
        std::string detail;
        for (const FockVector& u : basis) {
          for (const FockVector& v : basis) {
            UElement shifted_product =
                diamond(UElement::single(u, k - 1, i - 1), UElement::single(v, i - 1, l - 1));
            UElement product_shifted =
                shift_diag(diamond(UElement::single(u, k, i), UElement::single(v, i, l)));
            MembershipReport rep = in_qinf(shifted_product - product_shifted);
            if (!rep.member) {
              passed = false;
              std::ostringstream os;
              os << "u=" << u.str() << " v=" << v.str() << ": " << membership_detail(rep);
              detail = os.str();
              break;
            }
          }
          if (!passed) break;
        }
        std::ostringstream params;
        params << "k=" << k << " i=" << i << " l=" << l << "; u,v weight<=" << max_weight;
        record(out, "prop-mult", params.str(), passed, detail);
      }
  return out;
}

std::vector<CheckResult> check_prop_mult0(int max_weight, unsigned max_index) {
  std::vector<CheckResult> out;
  const auto basis = fock_basis_up_to(max_weight);
  for (unsigned k = 1; k <= max_index; ++k)
    for (unsigned l = 1; l <= max_index; ++l) {
      bool passed = true;
      std::string detail;
      for (const FockVector& u : basis) {
        for (const FockVector& v : basis) {
          UElement w = shift_diag(diamond(UElement::single(u, k, 0), UElement::single(v, 0, l)));
          MembershipReport rep = in_qinf(w);
          if (!rep.member) {
            passed = false;
            std::ostringstream os;
            os << "u=" << u.str() << " v=" << v.str() << ": " << membership_detail(rep);
            detail = os.str();
            break;
          }
        }
        if (!passed) break;
      }
      std::ostringstream params;
      params << "k=" << k << " l=" << l << "; u,v weight<=" << max_weight;
      record(out, "prop-mult0", params.str(), passed, detail);
    }
  return out;
}

namespace {

bool both_members(const UElement& a, std::string& detail) {
  DiagonalShiftReport rep = diagonal_shift_report(a);
  if (rep.original.member && rep.shifted.member) return true;
  std::ostringstream os;
  os << "original: " << membership_detail(rep.original)
     << "; shifted: " << membership_detail(rep.shifted);
  detail = os.str();
  return false;
}

}  // namespace

std::vector<CheckResult> check_theorem_main() {
  std::vector<CheckResult> out;
  const auto basis3 = fock_basis_up_to(3);
  const auto basis2 = fock_basis_up_to(2);

  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned l = 1; l <= 3; ++l)
      for (unsigned p = 0; p <= 2; ++p) {
        bool passed = true;
        std::string detail;
        for (const FockVector& u : basis3) {
          for (const FockVector& v : basis3) {
            std::string why;
            if (!both_members(o_infty_gen(u, v, k, l, p), why)) {
              passed = false;
              detail = "u=" + u.str() + " v=" + v.str() + ": " + why;
              break;
            }
          }
          if (!passed) break;
        }
        std::ostringstream params;
        params << "o-gen k=" << k << " l=" << l << " p=" << p << "; u,v weight<=3";
        record(out, "theorem-main/o-gen", params.str(), passed, detail);
      }

  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned l = 1; l <= 3; ++l) {
      bool passed = true;
      std::string detail;
      for (const FockVector& v : basis3) {
        std::string why;
        if (!both_members(l_gen(v, k, l), why)) {
          passed = false;
          detail = "v=" + v.str() + ": " + why;
          break;
        }
      }
      std::ostringstream params;
      params << "l-gen k=" << k << " l=" << l << "; v weight<=3";
      record(out, "theorem-main/l-gen", params.str(), passed, detail);
    }

  for (long long n = -2; n <= 2; ++n)
    for (long long p = -2; p <= 2; ++p) {
      bool passed = true;
      std::string detail;
      for (long long col = 1; col <= 2 && passed; ++col) {
        const long long l = col - p;
        for (unsigned k = 1; k <= 2 && passed; ++k)
          for (const FockVector& u : basis2) {
            for (const FockVector& v : basis2) {
              std::string why;
              if (!both_members(j_gen(u, v, k, l, p, n), why)) {
                passed = false;
                std::ostringstream os;
                os << "k=" << k << " l=" << l << " u=" << u.str() << " v=" << v.str() << ": "
                   << why;
                detail = os.str();
                break;
              }
            }
            if (!passed) break;
          }
      }
      std::ostringstream params;
      params << "j-gen n=" << n << " p=" << p << "; l+p in {1,2}, k<=2, u,v weight<=2";
      record(out, "theorem-main/j-gen", params.str(), passed, detail);
    }

  // Random ℚ-combinations of generators (all supported in rows/cols >= 1).
  std::mt19937_64 rng(kComboSeed);
  std::uniform_int_distribution<int> coeff_num(-2, 2);
  std::uniform_int_distribution<int> coeff_den(1, 2);
  std::uniform_int_distribution<unsigned> idx(1, 3);
  std::uniform_int_distribution<unsigned> small_p(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, basis3.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    UElement combo;
    for (int g = 0; g < 3; ++g) {
      Rational c(coeff_num(rng), coeff_den(rng));
      if (c == 0) c = 1;
      UElement gen = (g % 2 == 0)
                         ? o_infty_gen(basis3[pick(rng)], basis3[pick(rng)], idx(rng), idx(rng),
                                       small_p(rng))
                         : l_gen(basis3[pick(rng)], idx(rng), idx(rng));
      combo += gen * c;
    }
    std::string why;
    bool passed = both_members(combo, why);
    std::ostringstream params;
    params << "combo trial=" << trial << " seed=" << kComboSeed;
    record(out, "theorem-main/combo", params.str(), passed, why);
  }
  return out;
}

std::vector<CheckResult> check_counterexample(unsigned nmax) {
  std::vector<CheckResult> out;
  for (unsigned n = 1; n <= nmax; ++n) {
    UElement e = counterexample_element(n);
    MembershipReport original = in_qinf(e);
    MembershipReport shifted = in_qinf(shift_diag(e));

    bool passed = original.member && !shifted.member;
    std::string detail;
    if (!passed) {
      detail = "original: " + membership_detail(original) + "; shifted: " + membership_detail(shifted);
    } else {
      // The shifted element must fail on the class of (1,...,1) at level n-1
      // with image exactly twice the class.
      const Partition ones(std::vector<int>(n - 1, 1));
      const Witness& w = *shifted.witness;
      GrVector expected = GrVector::cls(static_cast<int>(n - 1), ones, LambdaPoly(2));
      if (w.column != n - 1 || !(w.partition == ones) || w.image != expected) {
        passed = false;
        detail = "unexpected witness: " + membership_detail(shifted);
      }
    }
    std::ostringstream params;
    params << "n=" << n;
    record(out, "counterexample", params.str(), passed, detail);
  }
  {
    // Distinct diagonal supports make the family linearly independent.
    bool passed = true;
    std::string detail;
    for (unsigned n = 1; n <= nmax; ++n) {
      UElement e = counterexample_element(n);
      if (e.entries().size() != 1 || e.entries().begin()->first != UElement::Index{n, n}) {
        passed = false;
        detail = "E_n not supported on the single diagonal entry (n,n)";
        break;
      }
    }
    std::ostringstream params;
    params << "n=1.." << nmax;
    record(out, "counterexample/independence", params.str(), passed, detail);
  }
  return out;
}

std::vector<CheckResult> check_a1_heis() {
  std::vector<CheckResult> out;
  const FockVector one = FockVector::vacuum();
  const FockVector x = alpha_monomial({1});
  const FockVector y = alpha_monomial({1, 1});
  const FockVector x2 = star_n(x, x, 1);
  const FockVector f1 = x2 - y;                      // x^2 - y
  const FockVector f2 = f1 + one * Rational(2);      // x^2 - y + 2
  const FockVector r = star_n(f1, f2, 1);

  const GrVector cls0 = GrVector::cls(0, Partition());
  const GrVector cls1 = GrVector::cls(1, Partition({1}));

  auto act = [](const FockVector& v, unsigned level, const GrVector& cls) {
    return theta_apply(UElement::single(v, level, level), cls);
  };

  GrVector img = act(f1, 0, cls0);
  record(out, "a1-heis/x2-y-on-gr0", "level 0", img.is_zero(), "image " + img.str());

  img = act(f1, 1, cls1);
  record(out, "a1-heis/x2-y-on-gr1", "level 1", img == cls1 * LambdaPoly(-2),
         "image " + img.str() + " (expected -2 * class)");

  img = act(f2, 0, cls0);
  record(out, "a1-heis/x2-y+2-on-gr0", "level 0", img == cls0 * LambdaPoly(2),
         "image " + img.str() + " (expected 2 * class)");

  img = act(f2, 1, cls1);
  record(out, "a1-heis/x2-y+2-on-gr1", "level 1", img.is_zero(), "image " + img.str());

  bool r0 = act(r, 0, cls0).is_zero();
  record(out, "a1-heis/relation-on-gr0", "(x2-y)*_1(x2-y+2) at level 0", r0,
         "image " + act(r, 0, cls0).str());

  bool r1 = act(r, 1, cls1).is_zero();
  record(out, "a1-heis/relation-on-gr1", "(x2-y)*_1(x2-y+2) at level 1", r1,
         "image " + act(r, 1, cls1).str());
  return out;
}

std::vector<std::string> suite_names() {
  return {"jacobi", "diamond-star", "mult", "theorem-main", "counterexample", "a1-heis", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  if (suite == "jacobi") return check_jacobi();
  if (suite == "diamond-star") return check_diamond_star();
  if (suite == "mult") {
    append(check_prop_mult());
    append(check_prop_mult0());
    return out;
  }
  if (suite == "theorem-main") return check_theorem_main();
  if (suite == "counterexample") return check_counterexample();
  if (suite == "a1-heis") return check_a1_heis();
  if (suite == "all") {
    append(check_jacobi());
    append(check_diamond_star());
    append(check_prop_mult());
    append(check_prop_mult0());
    append(check_theorem_main());
    append(check_counterexample());
    append(check_a1_heis());
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace uinf
