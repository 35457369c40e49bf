#include "diagsum/substitution.hpp"

#include <algorithm>
#include <limits>

namespace diagsum {

char Alphabet::glyph(Letter a) const {
  if (a >= glyphs.size()) {
    throw std::out_of_range("letter id " + std::to_string(int(a)) +
                            " outside alphabet of size " +
                            std::to_string(glyphs.size()));
  }
  return glyphs[a];
}

std::optional<Letter> Alphabet::find(char glyph) const {
  auto pos = glyphs.find(glyph);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (unsigned char a : w) out.push_back(glyph(static_cast<Letter>(a)));
  return out;
}

Word Alphabet::parse(const std::string& text) const {
  Word out;
  out.reserve(text.size());
  for (char g : text) {
    auto a = find(g);
    if (!a) {
      throw std::out_of_range(std::string("glyph '") + g +
                              "' not in alphabet");
    }
    out.push_back(static_cast<char>(*a));
  }
  return out;
}

const Word& Substitution::rule(Letter a) const {
  if (a >= rules.size()) {
    throw std::out_of_range("letter id " + std::to_string(int(a)) +
                            " has no rule");
  }
  return rules[a];
}

bool Substitution::non_erasing() const {
  return std::all_of(rules.begin(), rules.end(),
                     [](const Word& r) { return !r.empty(); });
}

bool Substitution::uniform() const {
  if (rules.empty()) return true;
  return std::all_of(rules.begin(), rules.end(), [&](const Word& r) {
    return r.size() == rules.front().size();
  });
}

Word Substitution::apply(const Word& w) const {
  Word out;
  std::size_t total = 0;
  for (unsigned char a : w) total += rule(static_cast<Letter>(a)).size();
  out.reserve(total);
  for (unsigned char a : w) out += rule(static_cast<Letter>(a));
  return out;
}

std::vector<std::uint64_t> Substitution::image_lengths(
    int n, std::uint64_t cap) const {
  std::vector<std::uint64_t> len(rules.size(), 1);
  for (int step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next(rules.size(), 0);
    bool all_saturated = true;
    for (std::size_t a = 0; a < rules.size(); ++a) {
      std::uint64_t sum = 0;
      for (unsigned char b : rules[a]) {
        sum += len[static_cast<Letter>(b)];
        if (sum >= cap) {
          sum = cap;
          break;
        }
      }
      next[a] = sum;
      if (sum < cap) all_saturated = false;
    }
    len = std::move(next);
    if (all_saturated) break;  // further steps cannot change anything
  }
  return len;
}

Word Substitution::iterate(Letter a, int n, const Limits& limits) const {
  if (n < 0) throw std::invalid_argument("iterate: negative iteration count");
  rule(a);  // validate the letter
  const std::uint64_t cap = static_cast<std::uint64_t>(limits.max_length) + 1;
  if (image_lengths(n, cap)[a] > limits.max_length) {
    throw ResourceLimitError("iterate: |sigma^" + std::to_string(n) +
                             "(letter)| exceeds max_length " +
                             std::to_string(limits.max_length));
  }
  Word w(1, static_cast<char>(a));
  for (int i = 0; i < n; ++i) w = apply(w);
  return w;
}

Letter MorphicSystem::code(Letter a) const {
  if (a >= coding.size()) {
    throw std::out_of_range("letter id " + std::to_string(int(a)) +
                            " has no coding");
  }
  return static_cast<Letter>(coding[a]);
}

bool MorphicSystem::identity_coded() const {
  for (std::size_t a = 0; a < coding.size(); ++a) {
    if (static_cast<std::size_t>(coding[a]) != a) return false;
  }
  return true;
}

void check_system(const MorphicSystem& s) {
  const auto k = s.sub.alphabet.size();
  if (k == 0) throw std::invalid_argument("system: empty alphabet");
  if (k > 64) throw std::invalid_argument("system: alphabet too large");
  if (s.sub.rules.size() != k) {
    throw std::invalid_argument("system: need exactly one rule per letter");
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (s.sub.rules[a].empty()) {
      throw std::invalid_argument("system: erasing rule for letter '" +
                                  std::string(1, s.sub.alphabet.glyphs[a]) +
                                  "'");
    }
    for (unsigned char b : s.sub.rules[a]) {
      if (b >= k) throw std::invalid_argument("system: rule uses unknown letter");
    }
  }
  if (s.start >= k) throw std::invalid_argument("system: start letter unknown");
  const Word& r0 = s.sub.rules[s.start];
  if (r0.size() < 2 || static_cast<Letter>(r0[0]) != s.start) {
    throw std::invalid_argument(
        "system: start letter is not prolongable (rule must begin with the "
        "letter and have length >= 2)");
  }
  if (s.coding.size() != k) {
    throw std::invalid_argument("system: coding must cover every letter");
  }
  for (unsigned char c : s.coding) {
    if (c > 1) throw std::invalid_argument("system: coding values must be 0 or 1");
  }
  if (s.index_base != 0 && s.index_base != 1) {
    throw std::invalid_argument("system: index_base must be 0 or 1");
  }
}

PrefixStream::PrefixStream(const MorphicSystem& s, std::size_t target_length,
                           const Limits& limits)
    : system_(s) {
  check_system(s);
  if (target_length > limits.max_length) {
    throw ResourceLimitError("prefix: requested length " +
                             std::to_string(target_length) +
                             " exceeds max_length " +
                             std::to_string(limits.max_length));
  }
  if (target_length == 0) return;
  // Smallest depth whose image of the start letter covers the request,
  // found by iterating the image-length vector (saturated at the target).
  const std::uint64_t cap = static_cast<std::uint64_t>(target_length);
  std::vector<std::uint64_t> len(s.sub.rules.size(), 1);
  while (len[s.start] < cap) {
    if (depth_ >= (std::size_t{1} << 22)) {
      throw ResourceLimitError("prefix: expansion depth limit reached");
    }
    std::vector<std::uint64_t> next(len.size(), 0);
    for (std::size_t a = 0; a < len.size(); ++a) {
      std::uint64_t sum = 0;
      for (unsigned char b : s.sub.rules[a]) {
        sum += len[static_cast<Letter>(b)];
        if (sum >= cap) {
          sum = cap;
          break;
        }
      }
      next[a] = sum;
    }
    len = std::move(next);
    ++depth_;
  }
  stack_.reserve(depth_ + 1);
  stack_.push_back(Frame{s.start, 0});
}

Letter PrefixStream::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (stack_.size() == depth_ + 1) {
      Letter out = top.letter;
      stack_.pop_back();
      return system_.code(out);
    }
    const Word& r = system_.sub.rule(top.letter);
    if (top.child == r.size()) {
      stack_.pop_back();
      continue;
    }
    Letter child = static_cast<Letter>(r[top.child++]);
    stack_.push_back(Frame{child, 0});
  }
  throw std::logic_error("PrefixStream::next past the end");
}

Word prefix(const MorphicSystem& s, std::size_t length, const Limits& limits) {
  PrefixStream stream(s, length, limits);
  Word out;
  out.reserve(length);
  while (out.size() < length && !stream.done()) {
    out.push_back(static_cast<char>(stream.next()));
  }
  if (out.size() < length) {
    throw std::logic_error("prefix: fixed point ended early (broken system)");
  }
  return out;
}

std::vector<std::int64_t> positions(const MorphicSystem& s, Letter target,
                                    std::int64_t n_max, const Limits& limits) {
  if (n_max < s.index_base) return {};
  const std::size_t len = static_cast<std::size_t>(n_max - s.index_base + 1);
  Word x = prefix(s, len, limits);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (static_cast<Letter>(x[i]) == target) {
      out.push_back(static_cast<std::int64_t>(i) + s.index_base);
    }
  }
  return out;
}

namespace {

// reach[a][b]: letter b appears in some sigma^m(a), m >= 1.
std::vector<std::vector<bool>> reachability(const Substitution& sub) {
  const std::size_t k = sub.rules.size();
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (unsigned char b : sub.rules[a]) reach[a][b] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!reach[a][b]) continue;
        for (std::size_t c = 0; c < k; ++c) {
          if (reach[b][c] && !reach[a][c]) {
            reach[a][c] = true;
            changed = true;
          }
        }
      }
    }
  }
  return reach;
}

}  // namespace

SystemDiagnostics validate_system(const MorphicSystem& s) {
  check_system(s);
  const std::size_t k = s.sub.rules.size();
  SystemDiagnostics d;
  d.non_erasing = s.sub.non_erasing();
  const Word& r0 = s.sub.rules[s.start];
  d.prolongable_start =
      r0.size() >= 2 && static_cast<Letter>(r0[0]) == s.start;

  auto reach = reachability(s.sub);

  // A letter grows iff it reaches a letter that sits on a cycle and has an
  // image of length >= 2 (each pass around the cycle then adds material).
  d.growing.assign(k, false);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      bool reaches_b = (a == b) || reach[a][b];
      if (reaches_b && reach[b][b] && s.sub.rules[b].size() >= 2) {
        d.growing[a] = true;
        break;
      }
    }
  }

  d.primitive = true;
  for (std::size_t a = 0; a < k && d.primitive; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!reach[a][b]) {
        d.primitive = false;
        break;
      }
    }
  }
  return d;
}

}  // namespace diagsum
