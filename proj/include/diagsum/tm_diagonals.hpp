#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagsum/product2d.hpp"
#include "diagsum/substitution.hpp"

namespace diagsum {

using PairWord = std::vector<PairLetter>;

// Letterwise 2-uniform map on pair letters: (i,j) -> (i, ~j)(~i, j), i.e.
// a->bc, b->ad, c->da, d->cb.
PairWord sigma_diag(const PairWord& w);

// Disjoint consecutive pairs: (w[2t], w[2t+1]) -> (w[2t].first,
// w[2t+1].second). Halves the length; rejects odd input. Left inverse of
// sigma_diag on letters: beta_diag(sigma_diag(w)) == w.
PairWord beta_diag(const PairWord& w);

// Overlapping adjacent pairs: output[t] = (w[t].first, w[t+1].second),
// length |w|-1. This pairing realizes d_{2n+1} from d_{2n+2} exactly.
PairWord beta_adjacent(const PairWord& w);

struct CheckReport {
  bool ok = true;
  std::optional<std::int64_t> first_failure;
  std::string detail;
  std::vector<std::string> notes;
};

// Checks d_{2n} == sigma_diag(d_n) and d_{2n+1} == beta_adjacent(d_{2n+2})
// for all 1 <= n <= n_max, diagonals taken independently from the 1D word.
CheckReport verify_recursions(std::int64_t n_max, const Limits& limits = {});

// Checks d_{2^m} is over {b,c} for odd m and over {a,d} for even m, for all
// 2^m <= max_index.
CheckReport verify_purity(std::int64_t max_index, const Limits& limits = {});

// Which red diagonals a block is allowed to have: d_i for i in
// [1, small_band], d_i+ for i in [2^n - upper_band, 2^n - 1], and d_i or
// d_i+ at i = 2^N for N >= min_power_exp.
struct BlockPropertyRules {
  std::int64_t small_band = 5;
  std::int64_t upper_band = 5;
  int min_power_exp = 2;
};

// For each level n in [n_lo, n_hi] and all four pair letters: red offsets of
// the expansion's diagonal profile (target a) lie inside the allowed set.
// Notes record the observed red sets per block.
CheckReport verify_block_properties(int n_lo, int n_hi,
                                    const BlockPropertyRules& rules = {},
                                    const Limits& limits = {});

struct ClosedFormReport {
  bool aa = false;
  bool ab = false;
  bool bb = false;
  std::string detail;
  bool ok() const { return aa && ab && bb; }
};

// Complements up to N against the closed forms: AA = {2,4} and the values
// 2^(2m+1)-1; AB = 2^(2m)-1; BB = {0} and 2^(2m+1)-1.
ClosedFormReport tm_closed_form_check(std::int64_t N, const Limits& limits = {});

}  // namespace diagsum
