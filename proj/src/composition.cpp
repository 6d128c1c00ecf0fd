#include "qsymkit/composition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "qsymkit/error.hpp"

namespace qsym {

int mask_size(SubsetMask m) { return std::popcount(m); }

SubsetMask mask_from_elements(const std::vector<int>& elems, int bound) {
  SubsetMask m = 0;
  for (int e : elems) {
    if (e < 1 || e > bound)
      throw InvalidArgument("set element " + std::to_string(e) + " outside [1," + std::to_string(bound) + "]");
    m |= mask_bit(e);
  }
  return m;
}

std::vector<int> mask_elements(SubsetMask m) {
  std::vector<int> r;
  for (int i = 1; m; ++i, m >>= 1U)
    if (m & 1U) r.push_back(i);
  return r;
}

SubsetMask full_mask(int k) { return k <= 0 ? 0 : (k >= 32 ? ~SubsetMask(0) : (SubsetMask(1) << k) - 1); }

std::strong_ordering canonical_compare(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
    n_ += p;
  }
  if (n_ > kMaxDegree) throw InvalidArgument("composition size exceeds " + std::to_string(kMaxDegree));
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition Composition::from_set(SubsetMask set, int n) {
  if (n < 0 || n > kMaxDegree) throw InvalidArgument("bad degree " + std::to_string(n));
  if (n == 0) {
    if (set) throw InvalidArgument("nonempty set for degree 0");
    return Composition();
  }
  if (set & ~full_mask(n - 1)) throw InvalidArgument("set not contained in [n-1]");
  std::vector<int> parts;
  int last = 0;
  for (int i : mask_elements(set)) {
    parts.push_back(i - last);
    last = i;
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

Composition Composition::from_set(const std::vector<int>& set, int n) {
  return from_set(mask_from_elements(set, std::max(0, n - 1)), n);
}

SubsetMask Composition::set_mask() const {
  SubsetMask m = 0;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    m |= mask_bit(s);
  }
  return m;
}

std::vector<int> Composition::set() const { return mask_elements(set_mask()); }

std::vector<int> Composition::prefix_sums() const {
  std::vector<int> r;
  int s = 0;
  for (int p : parts_) r.push_back(s += p);
  return r;
}

Composition Composition::reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

Composition Composition::scaled(int d) const {
  std::vector<int> r = parts_;
  for (int& p : r) p *= d;
  return Composition(std::move(r));
}

static std::string bracket(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string Composition::to_string() const { return bracket(parts_); }

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  return canonical_compare(a.parts_, b.parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::sorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const { return bracket(parts_); }

Partition sort_to_partition(const Composition& a) { return Partition::sorted(a.parts()); }

bool refines(const Composition& finer, const Composition& coarser) {
  if (finer.size() != coarser.size()) throw InvalidArgument("refines: compositions of different sizes");
  SubsetMask f = finer.set_mask(), c = coarser.set_mask();
  return (c & ~f) == 0;
}

std::vector<Composition> compositions(int n) {
  if (n < 0 || n > 24) throw InvalidArgument("compositions: degree out of range");
  std::vector<Composition> r;
  if (n == 0) return {Composition()};
  for (SubsetMask m = 0; m < (SubsetMask(1) << (n - 1)); ++m) r.push_back(Composition::from_set(m, n));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> r;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      r.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Composition> coarsenings(const Composition& a) {
  std::vector<Composition> r;
  SubsetMask s = a.set_mask();
  for (SubsetMask sub = s;; sub = (sub - 1) & s) {
    r.push_back(Composition::from_set(sub, a.size()));
    if (sub == 0) break;
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Composition> refinements(const Composition& a) {
  std::vector<Composition> r;
  if (a.size() == 0) return {a};
  SubsetMask free = full_mask(a.size() - 1) & ~a.set_mask();
  SubsetMask s = a.set_mask();
  for (SubsetMask sub = free;; sub = (sub - 1) & free) {
    r.push_back(Composition::from_set(s | sub, a.size()));
    if (sub == 0) break;
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Composition> rearrangements(const Partition& lambda) {
  std::vector<int> v = lambda.parts();
  std::sort(v.begin(), v.end());
  std::vector<Composition> r;
  do {
    r.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(r.begin(), r.end());
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer z_of(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  Integer r = 1;
  for (const auto& [i, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    r *= pw * factorial(m);
  }
  return r;
}

Integer pi_prefix(const std::vector<int>& parts) {
  Integer r = 1;
  long s = 0;
  for (int p : parts) r *= (s += p);
  return r;
}

Integer pi_rel(const Composition& alpha, const Composition& beta) {
  if (!refines(alpha, beta)) throw InvalidArgument("pi_rel: alpha does not refine beta");
  Integer r = 1;
  std::size_t j = 0;
  for (int b : beta.parts()) {
    std::vector<int> run;
    int s = 0;
    while (s < b) {
      s += alpha[j];
      run.push_back(alpha[j++]);
    }
    r *= pi_prefix(run);
  }
  return r;
}

int moebius_mu(int n) {
  if (n < 1) throw InvalidArgument("moebius_mu: n must be positive");
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> r;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) r.push_back(d);
  return r;
}

}  // namespace qsym
