#include "uinf/grmod.hpp"

#include <sstream>
#include <stdexcept>

namespace uinf {

GrVector GrVector::cls(int level, const Partition& p, const LambdaPoly& c) {
  if (p.size() != level)
    throw std::invalid_argument("GrVector: partition size must equal the level");
  GrVector x;
  x.add_term(level, p, c);
  return x;
}

LambdaPoly GrVector::coeff(int level, const Partition& p) const {
  auto it = terms_.find(GrKey{level, p});
  return it == terms_.end() ? LambdaPoly() : it->second;
}

void GrVector::add_term(int level, const Partition& p, const LambdaPoly& c) {
  if (c.is_zero()) return;
  if (p.size() != level)
    throw std::invalid_argument("GrVector: partition size must equal the level");
  GrKey key{level, p};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrVector& GrVector::operator+=(const GrVector& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.level, key.partition, c);
  return *this;
}

GrVector GrVector::operator-(const GrVector& o) const {
  GrVector r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key.level, key.partition, -c);
  return r;
}

GrVector GrVector::operator*(const LambdaPoly& c) const {
  GrVector r;
  for (const auto& [key, x] : terms_) r.add_term(key.level, key.partition, x * c);
  return r;
}

GrVector GrVector::evaluate_at(const Rational& lambda0) const {
  GrVector r;
  for (const auto& [key, c] : terms_)
    r.add_term(key.level, key.partition, LambdaPoly(c.evaluate_at(lambda0)));
  return r;
}

std::string GrVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_constant()) {
      os << c.coeff(0);
    } else {
      os << '(' << c.str() << ')';
    }
    os << " * [";
    for (int part : key.partition.parts()) os << "a(-" << part << ')';
    os << "|0>]_" << key.level;
  }
  return os.str();
}

std::vector<GrVector> gr_basis(int n) {
  std::vector<GrVector> basis;
  for (const Partition& p : partitions_of(n)) basis.push_back(GrVector::cls(n, p));
  return basis;
}

GrVector theta_apply(const UElement& a, const GrVector& x, const LambdaPoly& alpha0) {
  GrVector out;
  for (const auto& [kl, v] : a.entries()) {
    const long long k = kl.first;
    const long long l = kl.second;
    for (const auto& [key, c] : x.terms()) {
      if (key.level != static_cast<int>(l)) continue;
      const FockVector rep = FockVector::basis(key.partition, c);
      for (const auto& [d, v_d] : weight_split(v)) {
        FockVector img = mode(v_d, d - 1 + l - k, rep, alpha0);
        // Reduction mod Ω_{k-1}: keep the degree-k part. The grading makes
        // every term land at degree exactly k, lower ones lie in Ω_{k-1}.
        for (const auto& [p, pc] : img.terms()) {
          if (p.size() == static_cast<int>(k)) out.add_term(static_cast<int>(k), p, pc);
        }
      }
    }
  }
  return out;
}

}  // namespace uinf
