#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diagsum/product2d.hpp"

namespace diagsum {

// A straight line across the anti-diagonal k+l == offset.
struct OverlayLine {
  std::int64_t offset = 0;
  std::string color;
};

struct RenderSpec {
  Block2D block;
  int cell_size = 16;
  std::map<PairLetter, std::string> palette;  // fill per pair letter
  bool label_cells = false;
  std::vector<OverlayLine> overlays;
};

// The four-color scheme of the figures: a green, b yellow, c blue, d red.
std::map<PairLetter, std::string> default_palette();

// One overlay per anti-diagonal offset, for the first count_limit offsets
// (all of them when negative): green where the diagonal contains the target,
// red where it does not.
std::vector<OverlayLine> target_overlays(const Block2D& block,
                                         PairLetter target,
                                         std::int64_t count_limit = -1);

// One rectangle per cell, row 0 at the bottom, optional cell labels and
// overlay lines. Throws if the block is empty or the palette is missing an
// occurring letter.
std::string render_svg(const RenderSpec& spec);

}  // namespace diagsum
