#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qsymkit/param_poly.hpp"

namespace qsym {

// Subsets of [n-1] (or [n]) as bitmasks: element i lives in bit i-1.
using SubsetMask = std::uint32_t;
inline constexpr int kMaxDegree = 32;

inline bool mask_has(SubsetMask m, int i) { return (m >> (i - 1)) & 1U; }
inline SubsetMask mask_bit(int i) { return SubsetMask(1) << (i - 1); }
int mask_size(SubsetMask m);
SubsetMask mask_from_elements(const std::vector<int>& elems, int bound);
std::vector<int> mask_elements(SubsetMask m);
SubsetMask full_mask(int k);  // {1..k}

// A composition of n. Ordered by length, then lexicographically.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  static Composition from_set(SubsetMask set, int n);
  static Composition from_set(const std::vector<int>& set, int n);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  SubsetMask set_mask() const;
  std::vector<int> set() const;
  std::vector<int> prefix_sums() const;
  Composition reversed() const;
  Composition scaled(int d) const;

  // "[2,3,1]"
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::strong_ordering canonical_compare(const std::vector<int>& a, const std::vector<int>& b);

// Weakly decreasing composition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);
  static Partition sorted(std::vector<int> parts);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  Composition as_composition() const { return Composition(parts_); }
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Shorter first, then larger parts first: s[4], s[3,1], s[2,2], s[2,1,1].
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.parts_.size() != b.parts_.size()) return a.parts_.size() <=> b.parts_.size();
    return b.parts_ <=> a.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

Partition sort_to_partition(const Composition& a);

// alpha <= beta in refinement order: Set(beta) is a subset of Set(alpha).
bool refines(const Composition& finer, const Composition& coarser);

// All compositions of n in canonical order. n = 0 yields the empty composition.
std::vector<Composition> compositions(int n);
std::vector<Partition> partitions(int n);
// Compositions beta >= alpha (coarsenings) and beta <= alpha (refinements).
std::vector<Composition> coarsenings(const Composition& a);
std::vector<Composition> refinements(const Composition& a);
// Distinct rearrangements of a partition, canonical order.
std::vector<Composition> rearrangements(const Partition& lambda);

Integer factorial(int n);
Integer binomial(int n, int k);
// z = prod i^{m_i} m_i! over multiplicities of the parts.
Integer z_of(const std::vector<int>& parts);
// Product of prefix sums.
Integer pi_prefix(const std::vector<int>& parts);
// Product over blocks of beta of pi of the corresponding run of alpha.
Integer pi_rel(const Composition& alpha, const Composition& beta);

int moebius_mu(int n);
std::vector<int> divisors(int n);

}  // namespace qsym
