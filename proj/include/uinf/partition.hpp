#pragma once

#include <compare>
#include <string>
#include <vector>

namespace uinf {

/// Integer partition: a weakly decreasing sequence of positive parts,
/// indexing the Fock basis monomial a(-i1)...a(-ij)|0>. The empty partition
/// stands for the vacuum. Ordered by (size, lexicographic on the descending
/// part vector), so within a fixed size the enumeration runs
/// (1,...,1) first and (n) last.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  int count(int part) const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Copy with one extra part adjoined (part >= 1).
  Partition with_part(int part) const;
  /// Copy with one occurrence of `part` removed; caller must check count.
  Partition without_part(int part) const;

  std::strong_ordering operator<=>(const Partition& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    return parts_ <=> o.parts_;
  }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  /// "(2,1)"; "()" for the vacuum.
  std::string str() const;

 private:
  std::vector<int> parts_;  // sorted descending
  int size_ = 0;
};

/// All partitions of n in canonical order ((1,...,1) first, (n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace uinf
