#include "uinf/uelement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uinf {

UElement UElement::single(const FockVector& v, unsigned k, unsigned l) {
  if (!v.lambda_free())
    throw std::invalid_argument("UElement entries must be λ-free (elements of V)");
  UElement a;
  a.add_entry(k, l, v);
  return a;
}

FockVector UElement::entry(unsigned k, unsigned l) const {
  auto it = entries_.find({k, l});
  return it == entries_.end() ? FockVector() : it->second;
}

std::set<unsigned> UElement::columns() const {
  std::set<unsigned> cols;
  for (const auto& [kl, v] : entries_) cols.insert(kl.second);
  return cols;
}

void UElement::add_entry(unsigned k, unsigned l, const FockVector& v) {
  if (v.is_zero()) return;
  auto it = entries_.find({k, l});
  if (it == entries_.end()) {
    entries_.emplace(Index{k, l}, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [kl, v] : o.entries_) add_entry(kl.first, kl.second, v);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [kl, v] : o.entries_) add_entry(kl.first, kl.second, -v);
  return *this;
}

UElement UElement::operator-() const {
  UElement r;
  for (const auto& [kl, v] : entries_) r.entries_.emplace(kl, -v);
  return r;
}

UElement UElement::operator*(const Rational& c) const {
  UElement r;
  if (c == 0) return r;
  for (const auto& [kl, v] : entries_) r.entries_.emplace(kl, v * c);
  return r;
}

std::string UElement::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [kl, v] : entries_) {
    if (!first) os << " + ";
    first = false;
    os << "[ " << v.str() << " ]{" << kl.first << ',' << kl.second << '}';
  }
  return os.str();
}

FockVector circ_n(const FockVector& u, const FockVector& v, unsigned n) {
  return res_kernel(u, v, -2LL * n - 2, n, alpha0_vacuum());
}

FockVector star_n(const FockVector& u, const FockVector& v, unsigned n) {
  FockVector out;
  for (unsigned m = 0; m <= n; ++m) {
    Rational c = parity_sign(m) * binom(m + n, n);
    out += res_kernel(u, v, -static_cast<long long>(n) - m - 1, n, alpha0_vacuum()) * c;
  }
  return out;
}

namespace {

// Single-entry ◇ with matching inner index n: lands at (k,l).
FockVector diamond_kernel(const FockVector& u, const FockVector& v, unsigned k, unsigned n,
                          unsigned l) {
  FockVector out;
  const long long base = -static_cast<long long>(k) + n - l - 1;
  for (unsigned m = 0; m <= n; ++m) {
    Rational c = binom(base, m);
    if (c == 0) continue;
    out += res_kernel(u, v, base - m, l, alpha0_vacuum()) * c;
  }
  return out;
}

}  // namespace

UElement diamond(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [km, u] : a.entries()) {
    for (const auto& [nl, v] : b.entries()) {
      if (km.second != nl.first) continue;  // inner indices must agree
      out.add_entry(km.first, nl.second,
                    diamond_kernel(u, v, km.first, km.second, nl.second));
    }
  }
  return out;
}

UElement o_infty_gen(const FockVector& u, const FockVector& v, unsigned k, unsigned l,
                     unsigned p) {
  const long long t = -(static_cast<long long>(k) + l + p + 2);
  return UElement::single(res_kernel(u, v, t, l, alpha0_vacuum()), k, l);
}

UElement l_gen(const FockVector& v, unsigned k, unsigned l) {
  if (!v.lambda_free()) throw std::invalid_argument("l_gen: v must be λ-free");
  FockVector w = l_minus_one(v) + l_zero(v) +
                 v * Rational(static_cast<long long>(l) - static_cast<long long>(k));
  return UElement::single(w, k, l);
}

UElement j_gen(const FockVector& u, const FockVector& v, unsigned k, long long l, long long p,
               long long n) {
  if (!u.lambda_free() || !v.lambda_free()) throw std::invalid_argument("j_gen: inputs must lie in V");
  const int wt_v = v.homogeneous_weight();
  if (wt_v < 0) throw std::invalid_argument("j_gen: v must be homogeneous");
  if (l + p < 0) throw std::invalid_argument("j_gen: requires l + p >= 0 (column index)");
  const unsigned col = static_cast<unsigned>(l + p);

  UElement out;
  for (long long j = 0; n + p - j >= 0; ++j) {
    Rational c = parity_sign(j) * binom(p, j);
    if (c == 0) continue;
    const unsigned inner = static_cast<unsigned>(n + p - j);
    out += diamond(UElement::single(v, k, inner), UElement::single(u, inner, col)) * c;
  }
  for (long long j = 0; l - n + k + p - j >= 0; ++j) {
    Rational c = parity_sign(p - j) * binom(p, j);
    if (c == 0) continue;
    const unsigned inner = static_cast<unsigned>(l - n + k + p - j);
    out -= diamond(UElement::single(u, k, inner), UElement::single(v, inner, col)) * c;
  }
  // Third sum: v_{p+j}u vanishes once p+j >= wt v + wt u (degree bound).
  const long long mode_cap = static_cast<long long>(wt_v) + u.max_degree() - 1;
  for (long long j = 0; p + j <= mode_cap; ++j) {
    Rational c = binom(wt_v + n - static_cast<long long>(k) - 1, j);
    if (c == 0) continue;
    FockVector w = mode(v, p + j, u, alpha0_vacuum());
    if (!w.is_zero()) out -= UElement::single(w, k, col) * c;
  }
  return out;
}

UElement shift_diag(const UElement& a) {
  UElement out;
  for (const auto& [kl, v] : a.entries()) {
    if (kl.first == 0 || kl.second == 0)
      throw std::domain_error("shift_diag: entry at row 0 or column 0");
    out.add_entry(kl.first - 1, kl.second - 1, v);
  }
  return out;
}

namespace {

std::vector<FockVector> fock_basis_up_to(int weight_cutoff) {
  std::vector<FockVector> basis;
  for (int d = 0; d <= weight_cutoff; ++d)
    for (const Partition& p : partitions_of(d)) basis.push_back(FockVector::basis(p));
  return basis;
}

}  // namespace

std::vector<FockVector> o_n_span(unsigned n, int weight_cutoff) {
  std::vector<FockVector> out;
  const auto basis = fock_basis_up_to(weight_cutoff);
  for (const FockVector& u : basis) {
    for (const FockVector& v : basis) {
      if (u.max_degree() + v.max_degree() > weight_cutoff) continue;
      FockVector g = circ_n(u, v, n);
      if (!g.is_zero()) out.push_back(std::move(g));
    }
  }
  for (const FockVector& v : basis) {
    FockVector g = l_minus_one(v) + l_zero(v);
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

bool in_span(const FockVector& target, const std::vector<FockVector>& generators) {
  if (target.is_zero()) return true;
  // Index the joint partition basis.
  std::map<Partition, std::size_t> index;
  auto index_of = [&](const FockVector& v) {
    for (const auto& [p, c] : v.terms()) {
      if (!c.is_constant()) throw std::invalid_argument("in_span: λ-free vectors only");
      index.emplace(p, 0);
    }
  };
  index_of(target);
  for (const auto& g : generators) index_of(g);
  std::size_t dim = 0;
  for (auto& [p, i] : index) i = dim++;

  auto to_row = [&](const FockVector& v) {
    std::vector<Rational> row(dim, Rational(0));
    for (const auto& [p, c] : v.terms()) row[index.at(p)] = c.coeff(0);
    return row;
  };

  // Incremental row reduction: keep a basis of pivot rows, then reduce the
  // target against it.
  std::vector<std::vector<Rational>> pivots;   // reduced rows
  std::vector<std::size_t> pivot_cols;
  auto reduce = [&](std::vector<Rational> row) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rational& lead = row[pivot_cols[r]];
      if (lead != 0) {
        Rational f = lead;
        for (std::size_t c = 0; c < dim; ++c) row[c] -= f * pivots[r][c];
      }
    }
    return row;
  };
  for (const auto& g : generators) {
    auto row = reduce(to_row(g));
    auto nz = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (nz == row.end()) continue;
    std::size_t col = static_cast<std::size_t>(nz - row.begin());
    Rational inv = *nz;
    for (auto& x : row) x /= inv;
    pivots.push_back(std::move(row));
    pivot_cols.push_back(col);
  }
  auto rem = reduce(to_row(target));
  return std::all_of(rem.begin(), rem.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace uinf
