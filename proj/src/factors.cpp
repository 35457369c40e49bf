#include "diagsum/factors.hpp"

#include <algorithm>
#include <deque>

namespace diagsum {

namespace {

void insert_windows(const Word& w, int bound, std::unordered_set<Word>& into,
                    std::deque<Word>* frontier) {
  for (std::size_t start = 0; start < w.size(); ++start) {
    const std::size_t max_len =
        std::min<std::size_t>(static_cast<std::size_t>(bound),
                              w.size() - start);
    for (std::size_t len = 1; len <= max_len; ++len) {
      Word f = w.substr(start, len);
      if (into.insert(f).second && frontier) frontier->push_back(std::move(f));
    }
  }
}

}  // namespace

std::vector<Word> FactorSet::of_length(int n) const {
  std::vector<Word> out;
  for (const Word& w : words) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FactorSet factors_upto(const MorphicSystem& s, int length_bound,
                       const Limits& limits) {
  check_system(s);
  if (length_bound < 1) {
    throw std::invalid_argument("factors_upto: length bound must be >= 1");
  }
  if (!s.sub.non_erasing()) {
    throw std::invalid_argument(
        "factors_upto: closure is only sound for non-erasing substitutions");
  }

  // Seed with every factor of the shortest image of the start letter that
  // reaches the length bound, then close under taking images.
  const std::uint64_t cap = static_cast<std::uint64_t>(length_bound);
  int m0 = 0;
  while (s.sub.image_lengths(m0, cap)[s.start] < cap) ++m0;
  Word seed = s.sub.iterate(s.start, m0, limits);

  std::unordered_set<Word> raw;
  std::deque<Word> frontier;
  insert_windows(seed, length_bound, raw, &frontier);

  int rounds = 0;
  while (!frontier.empty()) {
    ++rounds;
    std::deque<Word> next;
    for (const Word& w : frontier) {
      insert_windows(s.sub.apply(w), length_bound, raw, &next);
      if (raw.size() > limits.max_length) {
        throw ResourceLimitError("factors_upto: factor set exceeds max_length");
      }
    }
    frontier = std::move(next);
  }

  FactorSet out;
  out.length_bound = length_bound;
  out.closure_rounds = rounds;
  out.stabilized = true;
  if (s.identity_coded()) {
    out.words = std::move(raw);
  } else {
    for (const Word& w : raw) {
      Word coded;
      coded.reserve(w.size());
      for (unsigned char a : w) coded.push_back(static_cast<char>(s.code(a)));
      out.words.insert(std::move(coded));
    }
  }
  return out;
}

LeftExtensions left_extensions(const MorphicSystem& s, const Word& coded_w,
                               int k, const Limits& limits) {
  if (coded_w.empty()) {
    throw std::invalid_argument("left_extensions: empty word");
  }
  if (k < 1) throw std::invalid_argument("left_extensions: k must be >= 1");
  const int total = static_cast<int>(coded_w.size()) + k;

  FactorSet f = factors_upto(s, total, limits);
  LeftExtensions out;
  for (const Word& cand : f.of_length(total)) {
    if (cand.compare(static_cast<std::size_t>(k), coded_w.size(), coded_w) ==
        0) {
      out.contexts.insert(cand.substr(0, static_cast<std::size_t>(k)));
    }
  }

  // Occurrences with fewer than k letters to the left all start within the
  // first k positions; a short prefix scan finds them.
  const std::size_t scan_len = static_cast<std::size_t>(k) + coded_w.size();
  Word x = prefix(s, scan_len, limits);
  for (std::size_t p = 0; p + coded_w.size() <= x.size() &&
                          p < static_cast<std::size_t>(k);
       ++p) {
    if (x.compare(p, coded_w.size(), coded_w) == 0) {
      out.at_boundary = true;
      break;
    }
  }
  return out;
}

}  // namespace diagsum
