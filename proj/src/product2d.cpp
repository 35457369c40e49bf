#include "diagsum/product2d.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace diagsum {

char pair_glyph(PairLetter p) {
  if (p.first > 1 || p.second > 1)
    throw std::invalid_argument("pair_glyph: letters outside binary range");
  return static_cast<char>('a' + 2 * p.first + p.second);
}

PairLetter pair_from_glyph(char g) {
  if (g < 'a' || g > 'd')
    throw std::invalid_argument("pair_from_glyph: expected a..d");
  int v = g - 'a';
  return PairLetter{static_cast<Letter>(v / 2), static_cast<Letter>(v % 2)};
}

PairLetter Block2D::at(std::int64_t k, std::int64_t l) const {
  if (k < 0 || k >= width || l < 0 || l >= height)
    throw std::out_of_range("Block2D::at: cell outside block");
  return cells[static_cast<std::size_t>(l * width + k)];
}

PairLetter& Block2D::at(std::int64_t k, std::int64_t l) {
  if (k < 0 || k >= width || l < 0 || l >= height)
    throw std::out_of_range("Block2D::at: cell outside block");
  return cells[static_cast<std::size_t>(l * width + k)];
}

std::string Block2D::to_text(const Alphabet& alphabet) const {
  std::string out;
  const bool compact = alphabet.size() <= 2;
  for (std::int64_t l = height - 1; l >= 0; --l) {
    for (std::int64_t k = 0; k < width; ++k) {
      PairLetter p = at(k, l);
      if (compact) {
        out += pair_glyph(p);
      } else {
        if (k > 0) out += ' ';
        out += alphabet.glyph(p.first);
        out += alphabet.glyph(p.second);
      }
    }
    if (l > 0) out += '\n';
  }
  return out;
}

Block2D ProductSubstitution::image(PairLetter p) const {
  const Word& rp = base.rule(p.first);
  const Word& rq = base.rule(p.second);
  Block2D b;
  b.width = static_cast<std::int64_t>(rp.size());
  b.height = static_cast<std::int64_t>(rq.size());
  b.cells.reserve(rp.size() * rq.size());
  for (std::size_t l = 0; l < rq.size(); ++l)
    for (std::size_t k = 0; k < rp.size(); ++k)
      b.cells.push_back(PairLetter{static_cast<Letter>(rp[k]),
                                   static_cast<Letter>(rq[l])});
  return b;
}

ProductSubstitution product(const Substitution& sub) {
  if (!sub.non_erasing())
    throw std::invalid_argument("product: substitution must be non-erasing");
  return ProductSubstitution{sub};
}

namespace {

// Pair letters reachable from p under repeated application of the product
// substitution.
std::set<PairLetter> reachable_pairs(const ProductSubstitution& psub,
                                     PairLetter p) {
  std::set<PairLetter> seen{p};
  std::vector<PairLetter> todo{p};
  while (!todo.empty()) {
    PairLetter q = todo.back();
    todo.pop_back();
    Block2D img = psub.image(q);
    for (PairLetter r : img.cells)
      if (seen.insert(r).second) todo.push_back(r);
  }
  return seen;
}

}  // namespace

Block2D expand2d(const ProductSubstitution& psub, PairLetter p, int n,
                 const Limits& limits) {
  if (n < 0) throw std::invalid_argument("expand2d: negative level");
  if (p.first >= psub.base.alphabet.size() ||
      p.second >= psub.base.alphabet.size())
    throw std::invalid_argument("expand2d: pair letter outside alphabet");

  std::set<PairLetter> needed = reachable_pairs(psub, p);

  // Level-by-level assembly: level 0 blocks are single cells, and the level
  // t block of q tiles the images of level t-1 blocks following image(q).
  std::map<PairLetter, Block2D> level;
  for (PairLetter q : needed)
    level[q] = Block2D{1, 1, {q}};

  for (int t = 1; t <= n; ++t) {
    std::map<PairLetter, Block2D> next;
    for (PairLetter q : needed) {
      Block2D img = psub.image(q);
      // Column widths depend only on the first coordinate, row heights only
      // on the second, so the children always tile a full rectangle.
      std::vector<std::int64_t> col_off(img.width + 1, 0);
      for (std::int64_t k = 0; k < img.width; ++k)
        col_off[k + 1] = col_off[k] + level[img.at(k, 0)].width;
      std::vector<std::int64_t> row_off(img.height + 1, 0);
      for (std::int64_t l = 0; l < img.height; ++l)
        row_off[l + 1] = row_off[l] + level[img.at(0, l)].height;

      Block2D out;
      out.width = col_off[img.width];
      out.height = row_off[img.height];
      if (out.width > 0 &&
          static_cast<std::uint64_t>(out.height) >
              static_cast<std::uint64_t>(limits.max_cells) /
                  static_cast<std::uint64_t>(out.width))
        throw ResourceLimitError("expand2d: block exceeds max_cells");
      out.cells.assign(static_cast<std::size_t>(out.width * out.height),
                       PairLetter{});
      for (std::int64_t l = 0; l < img.height; ++l) {
        for (std::int64_t k = 0; k < img.width; ++k) {
          const Block2D& child = level[img.at(k, l)];
          for (std::int64_t cl = 0; cl < child.height; ++cl)
            for (std::int64_t ck = 0; ck < child.width; ++ck)
              out.at(col_off[k] + ck, row_off[l] + cl) = child.at(ck, cl);
        }
      }
      next[q] = std::move(out);
    }
    level = std::move(next);
  }
  return level[p];
}

PairLetter cell(const MorphicSystem& s, std::int64_t k, std::int64_t l,
                const Limits& limits) {
  if (k < s.index_base || l < s.index_base)
    throw std::invalid_argument("cell: index below the system's first index");
  std::int64_t need = std::max(k, l) - s.index_base + 1;
  Word x = prefix(s, static_cast<std::size_t>(need), limits);
  return PairLetter{static_cast<Letter>(x[k - s.index_base]),
                    static_cast<Letter>(x[l - s.index_base])};
}

DiagonalWord diagonal_from_prefix(const Word& x, int index_base,
                                  std::int64_t n) {
  DiagonalWord d;
  d.n = n;
  if (index_base == 1) {
    if (n < 2) throw std::invalid_argument("diagonal: need n >= 2");
    if (static_cast<std::int64_t>(x.size()) < n - 1)
      throw std::invalid_argument("diagonal: prefix too short");
    d.letters.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k <= n - 1; ++k)
      d.letters.push_back(PairLetter{static_cast<Letter>(x[k - 1]),
                                     static_cast<Letter>(x[n - k - 1])});
  } else {
    if (n < 1) throw std::invalid_argument("diagonal: need n >= 1");
    if (static_cast<std::int64_t>(x.size()) < n)
      throw std::invalid_argument("diagonal: prefix too short");
    d.letters.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k <= n - 1; ++k)
      d.letters.push_back(PairLetter{static_cast<Letter>(x[k]),
                                     static_cast<Letter>(x[n - 1 - k])});
  }
  return d;
}

DiagonalWord diagonal(const MorphicSystem& s, std::int64_t n,
                      const Limits& limits) {
  std::int64_t need = (s.index_base == 1) ? n - 1 : n;
  if (need < 1) need = 1;
  Word x = prefix(s, static_cast<std::size_t>(need), limits);
  return diagonal_from_prefix(x, s.index_base, n);
}

std::vector<std::int64_t> DiagonalProfile::red_offsets() const {
  std::vector<std::int64_t> out;
  for (std::size_t o = 0; o < contains_target.size(); ++o)
    if (!contains_target[o]) out.push_back(static_cast<std::int64_t>(o));
  return out;
}

std::vector<std::int64_t> DiagonalProfile::green_offsets() const {
  std::vector<std::int64_t> out;
  for (std::size_t o = 0; o < contains_target.size(); ++o)
    if (contains_target[o]) out.push_back(static_cast<std::int64_t>(o));
  return out;
}

std::string DiagonalProfile::label(std::int64_t offset,
                                   std::int64_t block_size) {
  std::ostringstream os;
  if (offset < block_size) {
    os << "d" << (offset + 1);
  } else {
    // Offsets strictly above the main diagonal: offset = (S-1) + i labels
    // the i-th diagonal d_i^+ above it.
    os << "d" << (offset - block_size + 1) << "+";
  }
  return os.str();
}

DiagonalProfile block_diagonal_profile(const ProductSubstitution& psub,
                                       PairLetter p, int n, PairLetter target,
                                       const Limits& limits) {
  if (!psub.base.uniform())
    throw std::invalid_argument(
        "block_diagonal_profile: base substitution must be uniform");
  Block2D b = expand2d(psub, p, n, limits);
  if (b.width != b.height)
    throw std::logic_error("block_diagonal_profile: block not square");
  DiagonalProfile prof;
  prof.block_size = b.width;
  prof.contains_target.assign(static_cast<std::size_t>(2 * b.width - 1),
                              false);
  for (std::int64_t l = 0; l < b.height; ++l)
    for (std::int64_t k = 0; k < b.width; ++k)
      if (b.at(k, l) == target)
        prof.contains_target[static_cast<std::size_t>(k + l)] = true;
  return prof;
}

}  // namespace diagsum
