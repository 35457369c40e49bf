#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diagsum {

// A letter is a small id into an Alphabet. Words store letter ids as raw
// bytes (std::string is used as the container, *not* as display text);
// Alphabet::render turns a word back into its display glyphs.
using Letter = unsigned char;
using Word = std::string;

// Thrown when an operation would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caps for operations whose output size is data-dependent.
struct Limits {
  std::size_t max_length = std::size_t{1} << 24;  // 1D word lengths
  std::size_t max_cells = std::size_t{1} << 24;   // 2D block cell counts
};

struct Alphabet {
  std::string glyphs;  // display glyph of letter i is glyphs[i]

  std::size_t size() const { return glyphs.size(); }
  char glyph(Letter a) const;
  std::optional<Letter> find(char glyph) const;
  std::string render(const Word& w) const;
  Word parse(const std::string& text) const;  // glyphs -> letter ids

  bool operator==(const Alphabet&) const = default;

  static Alphabet binary() { return Alphabet{"01"}; }
};

// A substitution (morphism) on words: one image word per letter.
struct Substitution {
  Alphabet alphabet;
  std::vector<Word> rules;

  const Word& rule(Letter a) const;
  bool non_erasing() const;
  bool uniform() const;  // all images have equal length

  // Homomorphic extension to words. Throws std::out_of_range if w contains
  // a letter outside the alphabet.
  Word apply(const Word& w) const;

  // n-fold image of a single letter; iterate(a, 0) == "a".
  Word iterate(Letter a, int n, const Limits& limits = {}) const;

  // |sigma^n(a)| per letter, saturated at cap (avoids overflow for large n).
  std::vector<std::uint64_t> image_lengths(int n, std::uint64_t cap) const;

  bool operator==(const Substitution&) const = default;
};

// A substitution together with a prolongable start letter, a letter-to-letter
// coding onto {0,1}, and the index base its fixed point is read with.
struct MorphicSystem {
  std::string name;
  Substitution sub;
  Letter start = 0;
  Word coding;  // coding[a] in {0,1}; identity on binary alphabets
  int index_base = 0;

  Letter code(Letter a) const;
  bool identity_coded() const;

  bool operator==(const MorphicSystem&) const = default;
};

// Validates structural invariants (alphabet/rule consistency, prolongable
// start, total binary coding, index_base in {0,1}); throws
// std::invalid_argument on violation.
void check_system(const MorphicSystem& s);

// Streams the coded fixed point letter by letter via a depth-first expansion
// stack over sigma^depth(start). Memory is O(alphabet * depth + O(1)), so
// million-letter prefixes never materialise intermediate rewrites.
class PrefixStream {
 public:
  PrefixStream(const MorphicSystem& s, std::size_t target_length,
               const Limits& limits = {});

  bool done() const { return stack_.empty(); }
  Letter next();  // next coded letter; throws std::logic_error when done

 private:
  struct Frame {
    Letter letter;
    std::uint32_t child = 0;
  };
  const MorphicSystem& system_;
  std::vector<Frame> stack_;
  std::size_t depth_ = 0;
};

// Coded prefix of the fixed point, length letters.
Word prefix(const MorphicSystem& s, std::size_t length,
            const Limits& limits = {});

// Indices i in [index_base, n_max] with coded x_i == target, ascending.
std::vector<std::int64_t> positions(const MorphicSystem& s, Letter target,
                                    std::int64_t n_max,
                                    const Limits& limits = {});

struct SystemDiagnostics {
  bool non_erasing = false;
  bool prolongable_start = false;
  bool primitive = false;
  std::vector<bool> growing;  // per letter: |sigma^n(a)| unbounded?
};

SystemDiagnostics validate_system(const MorphicSystem& s);

}  // namespace diagsum
