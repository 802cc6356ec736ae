#include "nesthilb/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace nesthilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) out.push_back({r, c});
  return out;
}

bool Partition::is_contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int i = 0; i < length(); ++i)
    if (part(i) > other.part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

NestedPair::NestedPair(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!inner.is_contained_in(outer))
    throw std::invalid_argument("nested pair: " + inner.to_string() + " not contained in " +
                                outer.to_string());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<NestedPair> enumerate_nested_pairs(int n1, int n2) {
  if (n2 < 0 || n1 < n2) throw std::invalid_argument("empty nesting range");
  std::vector<NestedPair> out;
  const auto inners = enumerate_partitions(n2);
  for (const auto& mu : enumerate_partitions(n1))
    for (const auto& nu : inners)
      if (nu.is_contained_in(mu)) out.emplace_back(mu, nu);
  return out;
}

LaurentPoly z_character(const Partition& mu) {
  LaurentPoly z;
  for (const Cell& c : mu.cells()) z.add_term({c.row, c.col}, 1);
  return z;
}

}  // namespace nesthilb
