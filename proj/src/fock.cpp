#include "uinf/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace uinf {

FockVector FockVector::basis(const Partition& p, const LambdaPoly& c) {
  FockVector v;
  v.add_term(p, c);
  return v;
}

bool FockVector::lambda_free() const {
  for (const auto& [p, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

LambdaPoly FockVector::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LambdaPoly() : it->second;
}

int FockVector::max_degree() const {
  int d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p.size());
  return d;
}

int FockVector::homogeneous_weight() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.size();
  for (const auto& [p, c] : terms_)
    if (p.size() != d) return -1;
  return d;
}

void FockVector::add_term(const Partition& p, const LambdaPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

FockVector FockVector::operator-() const {
  FockVector r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

FockVector FockVector::operator*(const LambdaPoly& c) const {
  FockVector r;
  for (const auto& [p, x] : terms_) r.add_term(p, x * c);
  return r;
}

FockVector FockVector::evaluate_at(const Rational& lambda0) const {
  FockVector r;
  for (const auto& [p, c] : terms_) r.add_term(p, LambdaPoly(c.evaluate_at(lambda0)));
  return r;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_constant()) {
      Rational q = c.coeff(0);
      if (q != 1) os << q << " * ";
    } else {
      os << '(' << c.str() << ") * ";
    }
    for (int part : p.parts()) os << "a(-" << part << ')';
    os << "|0>";
  }
  return os.str();
}

WeightSplit weight_split(const FockVector& v) {
  WeightSplit s;
  for (const auto& [p, c] : v.terms()) s[p.size()].add_term(p, c);
  return s;
}

const LambdaPoly& alpha0_vacuum() {
  static const LambdaPoly zero;
  return zero;
}

const LambdaPoly& alpha0_formal() {
  static const LambdaPoly lam = LambdaPoly::lambda();
  return lam;
}

FockVector alpha_apply(int m, const FockVector& w, const LambdaPoly& alpha0) {
  FockVector r;
  for (const auto& [p, c] : w.terms()) {
    if (m < 0) {
      r.add_term(p.with_part(-m), c);
    } else if (m == 0) {
      r.add_term(p, c * alpha0);
    } else {
      int mult = p.count(m);
      if (mult > 0) r.add_term(p.without_part(m), c * Rational(static_cast<long long>(m) * mult));
    }
  }
  return r;
}

FockVector l_zero(const FockVector& v) {
  FockVector r;
  for (const auto& [p, c] : v.terms()) r.add_term(p, c * Rational(p.size()));
  return r;
}

namespace {

// mode() restricted to basis monomials, with the α(0) scalar left formal:
// coefficients are polynomials in that scalar, stored densely by its power.
// Legal because α(0) is central, so every zero-mode occurrence contributes
// one multiplicative factor of the scalar regardless of ordering.
using ScalarPoly = std::vector<Rational>;  // index = power of the α(0) scalar

using BasisModeResult = std::map<Partition, ScalarPoly>;

void accumulate(BasisModeResult& out, const Partition& p, unsigned zero_count, const Rational& c) {
  if (c == 0) return;
  ScalarPoly& poly = out[p];
  if (poly.size() <= zero_count) poly.resize(zero_count + 1, Rational(0));
  poly[zero_count] += c;
}

// One derivative factor of the normal-ordered product: the nonzero mode
// coefficients (-1)^{n-1} binom(j+n-1, n-1), tabulated over the admissible
// index window [lo, hi].
struct FactorTable {
  long long lo = 0;
  long long hi = -1;
  std::vector<Rational> coeff;  // coeff[j - lo]

  const Rational& at(long long j) const { return coeff[static_cast<std::size_t>(j - lo)]; }
};

// Walk all mode-index tuples (j_1..j_r) with sum_i (j_i + n_i) = m+1 and
// apply each normal-ordered term to the basis monomial w. Normal ordering
// means annihilation and zero modes only ever see the original monomial, so
// `remaining` tracks the not-yet-annihilated parts of w while created parts
// collect separately and are adjoined at the end.
void enumerate_tuples(const std::vector<FactorTable>& factors, std::size_t idx,
                      long long remaining_sum, const Rational& coeff_so_far, unsigned zero_count,
                      const Partition& remaining, std::vector<int>& created,
                      BasisModeResult& out) {
  if (idx == factors.size()) {
    if (remaining_sum == 0) {
      Partition result = remaining;
      for (int part : created) result = result.with_part(part);
      accumulate(out, result, zero_count, coeff_so_far);
    }
    return;
  }
  const FactorTable& table = factors[idx];
  // remaining factors must still be able to reach the target sum
  long long rest_lo = 0, rest_hi = 0;
  for (std::size_t r = idx + 1; r < factors.size(); ++r) {
    rest_lo += factors[r].lo;
    rest_hi += factors[r].hi;
  }
  long long j_lo = std::max(table.lo, remaining_sum - rest_hi);
  long long j_hi = std::min(table.hi, remaining_sum - rest_lo);
  for (long long j = j_lo; j <= j_hi; ++j) {
    const Rational& c = table.at(j);
    if (c == 0) continue;
    long long after = remaining_sum - j;
    if (j > 0) {
      int mult = remaining.count(static_cast<int>(j));
      if (mult == 0) continue;
      enumerate_tuples(factors, idx + 1, after, coeff_so_far * c * Rational(j * mult), zero_count,
                       remaining.without_part(static_cast<int>(j)), created, out);
    } else if (j == 0) {
      enumerate_tuples(factors, idx + 1, after, coeff_so_far * c, zero_count + 1, remaining,
                       created, out);
    } else {
      created.push_back(static_cast<int>(-j));
      enumerate_tuples(factors, idx + 1, after, coeff_so_far * c, zero_count, remaining, created,
                       out);
      created.pop_back();
    }
  }
}

std::string pack_key(const Partition& v, long long m, const Partition& w) {
  std::string key;
  key.reserve(std::min<std::size_t>(15, 2 * (v.parts().size() + w.parts().size()) + 6));
  auto push16 = [&key](int x) {
    key.push_back(static_cast<char>(x & 0xFF));
    key.push_back(static_cast<char>((x >> 8) & 0xFF));
  };
  for (int part : v.parts()) push16(part);
  key.push_back('\0');
  key.push_back('\0');
  key.append(std::to_string(m));
  key.push_back(';');
  for (int part : w.parts()) push16(part);
  return key;
}

const BasisModeResult& basis_mode(const Partition& v, long long m, const Partition& w) {
  thread_local std::unordered_map<std::string, BasisModeResult> cache;
  std::string key = pack_key(v, m, w);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  BasisModeResult result;
  const int d = v.size();
  const int e = w.size();
  const long long out_degree = e + d - m - 1;  // every surviving term lands here
  if (out_degree >= 0) {
    // Annihilation indices are parts of w (so <= e); created parts survive
    // normal ordering untouched, so they are bounded by the output degree.
    const int max_annihilate = e;
    const int max_create = static_cast<int>(out_degree);
    if (v.empty()) {
      if (m == -1) accumulate(result, w, 0, Rational(1));
    } else {
      std::vector<FactorTable> factors;
      factors.reserve(v.parts().size());
      for (int n_i : v.parts()) {
        FactorTable table;
        table.lo = -max_create;
        table.hi = max_annihilate;
        for (long long j = table.lo; j <= table.hi; ++j)
          table.coeff.push_back(parity_sign(n_i - 1) * binom(j + n_i - 1, n_i - 1));
        factors.push_back(std::move(table));
      }
      std::vector<int> created;
      enumerate_tuples(factors, 0, m + 1 - d, Rational(1), 0, w, created, result);
    }
  }
  auto [pos, inserted] = cache.emplace(std::move(key), std::move(result));
  return pos->second;
}

LambdaPoly instantiate(const ScalarPoly& poly, const LambdaPoly& alpha0) {
  if (poly.empty()) return LambdaPoly();
  if (alpha0.is_zero()) return LambdaPoly(poly[0]);
  if (alpha0.is_formal_lambda()) return LambdaPoly::from_coeffs(poly);
  if (alpha0.is_constant()) {
    const Rational c = alpha0.coeff(0);
    Rational acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * c + *it;
    return LambdaPoly(acc);
  }
  LambdaPoly acc;
  for (std::size_t z = 0; z < poly.size(); ++z) {
    if (poly[z] == 0) continue;
    acc += alpha0.pow(static_cast<unsigned>(z)) * poly[z];
  }
  return acc;
}

}  // namespace

FockVector mode(const FockVector& v, long long m, const FockVector& w, const LambdaPoly& alpha0) {
  if (!v.lambda_free()) throw std::invalid_argument("mode: only λ-free vectors act (v must lie in V)");
  const LambdaPoly unit(1);
  FockVector out;
  for (const auto& [vp, vc] : v.terms()) {
    const Rational vq = vc.coeff(0);
    for (const auto& [wp, wc] : w.terms()) {
      const LambdaPoly scale = (vq == 1) ? wc : wc * vq;
      const bool trivial = (scale == unit);
      for (const auto& [rp, spoly] : basis_mode(vp, m, wp)) {
        LambdaPoly inst = instantiate(spoly, alpha0);
        out.add_term(rp, trivial ? std::move(inst) : inst * scale);
      }
    }
  }
  return out;
}

FockVector l_minus_one(const FockVector& v) {
  return mode(v, -2, FockVector::vacuum(), alpha0_vacuum());
}

FockVector res_kernel(const FockVector& u, const FockVector& v, long long t, long long s,
                      const LambdaPoly& alpha0) {
  FockVector out;
  const int e = v.max_degree();
  for (const auto& [d, u_d] : weight_split(u)) {
    // u_m kills everything of degree <= e once m >= d + e.
    long long i_hi = d + e - t - 1;
    if (s + d >= 0) i_hi = std::min(i_hi, s + d);  // binomial expansion ends
    for (long long i = 0; i <= i_hi; ++i) {
      Rational b = binom(s + d, i);
      if (b == 0) continue;
      out += mode(u_d, t + i, v, alpha0) * b;
    }
  }
  return out;
}

}  // namespace uinf
