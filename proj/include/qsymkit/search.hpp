#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsymkit/poset.hpp"
#include "qsymkit/qsym.hpp"
#include "qsymkit/sym.hpp"

namespace qsym::search {

// sum_i coeffs[i] K_{posets[i]} together with its classical expansions when it
// is symmetric.
struct CombinationReport {
  std::vector<posets::Poset> posets;
  std::vector<Integer> coeffs;
  QSymElement element;  // Psi basis
  bool symmetric = false;
  std::optional<SymElement> s, h, p;
  bool schur_positive = false;
  bool h_positive = false;
  bool p_positive = false;
};

CombinationReport analyse(const std::vector<posets::Poset>& posets, const std::vector<Integer>& coeffs);

struct SearchResult {
  int trials = 0;
  // Distinct symmetric positive combinations met, in discovery order.
  std::vector<CombinationReport> symmetric;
  // Indices into `symmetric` that fail Schur or h positivity.
  std::vector<std::size_t> flagged;
};

// Each trial picks up to `max_terms` distinct posets of size n, solves for the
// symmetric combinations among them and samples a nonnegative integer one
// (posets with coefficient 0 are dropped).
// Deterministic in `seed`.
SearchResult search_positivity(int n, int trials, std::uint64_t seed, int max_terms = 8);

// Rational kernel of a matrix given by rows; basis vectors in RREF form.
std::vector<std::vector<Rational>> kernel(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

}  // namespace qsym::search
