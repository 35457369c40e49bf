#pragma once

#include <set>
#include <unordered_set>
#include <vector>

#include "diagsum/substitution.hpp"

namespace diagsum {

// All factors of the coded fixed point up to a length bound, computed by
// closing the factor set of a seed image under the substitution. Exact for
// non-erasing systems: a window of sigma^{m+1}(start) of length <= L lies in
// the image of a factor of sigma^m(start) of length <= L.
struct FactorSet {
  int length_bound = 0;
  std::unordered_set<Word> words;  // coded letter ids, every length 1..bound
  int closure_rounds = 0;
  bool stabilized = false;

  bool contains(const Word& w) const { return words.count(w) > 0; }
  std::vector<Word> of_length(int n) const;  // sorted lexicographically
};

FactorSet factors_upto(const MorphicSystem& s, int length_bound,
                       const Limits& limits = {});

struct LeftExtensions {
  std::set<Word> contexts;  // length-k coded words u with u+w a factor
  // True when w also occurs with fewer than k letters to its left, i.e. at
  // absolute positions closer than k to the start of the fixed point.
  bool at_boundary = false;
};

LeftExtensions left_extensions(const MorphicSystem& s, const Word& coded_w,
                               int k, const Limits& limits = {});

}  // namespace diagsum
