#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "diagsum/substitution.hpp"

namespace diagsum {

// A letter of the direct-product alphabet: a pair of 1D letters. The first
// component runs horizontally (column), the second vertically (row).
struct PairLetter {
  Letter first = 0;
  Letter second = 0;
  auto operator<=>(const PairLetter&) const = default;
};

// Display for pairs over a binary alphabet: (0,0)=a, (0,1)=b, (1,0)=c,
// (1,1)=d.
char pair_glyph(PairLetter p);
PairLetter pair_from_glyph(char g);

// A rectangular 2D word. Row 0 is the bottom row; cell (k, l) is column k of
// row l, both 0-based.
struct Block2D {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<PairLetter> cells;  // row-major from the bottom row up

  PairLetter at(std::int64_t k, std::int64_t l) const;
  PairLetter& at(std::int64_t k, std::int64_t l);
  // Text rendering, one row per line, bottom row printed last. Binary
  // alphabets use a..d glyphs; larger ones print space-separated digit pairs.
  std::string to_text(const Alphabet& alphabet) const;
};

// The direct product sigma x sigma: the image of (p, q) is the
// |rule(p)| x |rule(q)| block with entry (k, l) = (rule(p)[k], rule(q)[l]).
struct ProductSubstitution {
  Substitution base;
  Block2D image(PairLetter p) const;
};

ProductSubstitution product(const Substitution& sub);

// n-fold expansion of a pair letter. Sub-blocks are composed positionally:
// column widths follow the first-coordinate letter images, row heights the
// second-coordinate ones, so the result always tiles a full rectangle of
// |sigma^n(p.first)| x |sigma^n(p.second)| cells.
Block2D expand2d(const ProductSubstitution& psub, PairLetter p, int n,
                 const Limits& limits = {});

// The pair (x_k, x_l) of the coded fixed point; k, l >= index_base.
PairLetter cell(const MorphicSystem& s, std::int64_t k, std::int64_t l,
                const Limits& limits = {});

// The word read along an anti-diagonal of the 2D fixed point, ordered by
// increasing first coordinate. 1-based systems: entries (x_k, x_{n-k}) for
// k = 1..n-1, defined for n >= 2. 0-based systems are indexed by length:
// entries (x_k, x_{n-1-k}) for k = 0..n-1, defined for n >= 1.
struct DiagonalWord {
  std::int64_t n = 0;
  std::vector<PairLetter> letters;
};

DiagonalWord diagonal(const MorphicSystem& s, std::int64_t n,
                      const Limits& limits = {});
// Same, against an already-generated coded prefix (x[0] is index index_base).
DiagonalWord diagonal_from_prefix(const Word& x, int index_base,
                                  std::int64_t n);

// Red/green classification of the anti-diagonal offsets of a uniform
// expansion block: offset o (cells with k+l == o) is green when it contains
// the target pair letter. Offsets 0..S-1 are the within-block diagonal words
// d_1..d_S; offsets S..2S-2 the words d_1^+..d_{S-1}^+ above the main one.
struct DiagonalProfile {
  std::int64_t block_size = 0;       // S
  std::vector<bool> contains_target;  // indexed by offset, size 2S-1

  std::vector<std::int64_t> red_offsets() const;
  std::vector<std::int64_t> green_offsets() const;
  // Paper-style names: offsets 0..S-1 are d1..dS, offsets S..2S-2 are
  // d1+..d(S-1)+.
  static std::string label(std::int64_t offset, std::int64_t block_size);
};

DiagonalProfile block_diagonal_profile(const ProductSubstitution& psub,
                                       PairLetter p, int n, PairLetter target,
                                       const Limits& limits = {});

}  // namespace diagsum
