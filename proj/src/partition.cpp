#include "uinf/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uinf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::count(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with_part(int part) const {
  Partition r = *this;
  auto it = std::lower_bound(r.parts_.begin(), r.parts_.end(), part, std::greater<int>());
  r.parts_.insert(it, part);
  r.size_ += part;
  return r;
}

Partition Partition::without_part(int part) const {
  Partition r = *this;
  auto it = std::find(r.parts_.begin(), r.parts_.end(), part);
  if (it == r.parts_.end()) throw std::invalid_argument("no such part to remove");
  r.parts_.erase(it);
  r.size_ -= part;
  return r;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

// Partitions of n with every part <= bound, ascending in the canonical order.
void emit_bounded(int n, int bound, std::vector<int>& stack, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int first = 1; first <= std::min(n, bound); ++first) {
    stack.push_back(first);
    emit_bounded(n - first, first, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_bounded(n, n == 0 ? 1 : n, stack, out);
  return out;
}

}  // namespace uinf
