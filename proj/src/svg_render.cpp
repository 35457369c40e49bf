#include "diagsum/svg_render.hpp"

#include <sstream>
#include <stdexcept>

namespace diagsum {

std::map<PairLetter, std::string> default_palette() {
  return {
      {PairLetter{0, 0}, "#b3ffb3"},  // a: green
      {PairLetter{0, 1}, "#ffffb3"},  // b: yellow
      {PairLetter{1, 0}, "#b3b3ff"},  // c: blue
      {PairLetter{1, 1}, "#ffb3b3"},  // d: red
  };
}

std::vector<OverlayLine> target_overlays(const Block2D& block,
                                         PairLetter target,
                                         std::int64_t count_limit) {
  const std::int64_t total = block.width + block.height - 1;
  std::int64_t count =
      count_limit < 0 ? total : std::min(count_limit, total);
  std::vector<bool> green(static_cast<std::size_t>(total), false);
  for (std::int64_t l = 0; l < block.height; ++l)
    for (std::int64_t k = 0; k < block.width; ++k)
      if (block.at(k, l) == target)
        green[static_cast<std::size_t>(k + l)] = true;
  std::vector<OverlayLine> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t o = 0; o < count; ++o)
    out.push_back(OverlayLine{
        o, green[static_cast<std::size_t>(o)] ? "#1a9850" : "#d73027"});
  return out;
}

namespace {

std::string escape_text(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string cell_label(PairLetter p) {
  if (p.first <= 1 && p.second <= 1) return std::string(1, pair_glyph(p));
  return std::to_string(int(p.first)) + "," + std::to_string(int(p.second));
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  const Block2D& b = spec.block;
  if (b.cells.empty())
    throw std::invalid_argument("render_svg: empty block");
  if (spec.cell_size <= 0)
    throw std::invalid_argument("render_svg: non-positive cell size");
  const std::int64_t c = spec.cell_size;
  const std::int64_t w_px = b.width * c;
  const std::int64_t h_px = b.height * c;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_px
     << "\" height=\"" << h_px << "\" viewBox=\"0 0 " << w_px << " " << h_px
     << "\">\n";

  for (std::int64_t l = 0; l < b.height; ++l) {
    const std::int64_t y = (b.height - 1 - l) * c;
    for (std::int64_t k = 0; k < b.width; ++k) {
      PairLetter p = b.at(k, l);
      auto it = spec.palette.find(p);
      if (it == spec.palette.end())
        throw std::invalid_argument("render_svg: palette missing a letter");
      os << "<rect x=\"" << k * c << "\" y=\"" << y << "\" width=\"" << c
         << "\" height=\"" << c << "\" fill=\"" << it->second
         << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    }
  }

  if (spec.label_cells) {
    for (std::int64_t l = 0; l < b.height; ++l) {
      const std::int64_t y = (b.height - 1 - l) * c;
      for (std::int64_t k = 0; k < b.width; ++k) {
        os << "<text x=\"" << k * c + c / 2 << "\" y=\"" << y + (2 * c) / 3
           << "\" font-size=\"" << (2 * c) / 3
           << "\" text-anchor=\"middle\" font-family=\"monospace\">"
           << escape_text(cell_label(b.at(k, l))) << "</text>\n";
      }
    }
  }

  for (const OverlayLine& line : spec.overlays) {
    const std::int64_t o = line.offset;
    if (o < 0 || o > b.width + b.height - 2)
      throw std::invalid_argument("render_svg: overlay offset outside block");
    // The anti-diagonal k+l = o runs from its upper-left cell corner down to
    // its lower-right one; in screen coordinates both steps move down-right.
    const std::int64_t k_min = std::max<std::int64_t>(0, o - (b.height - 1));
    const std::int64_t k_max = std::min(b.width - 1, o);
    const std::int64_t l_max = o - k_min;
    const std::int64_t l_min = o - k_max;
    os << "<line x1=\"" << k_min * c << "\" y1=\""
       << (b.height - 1 - l_max) * c << "\" x2=\"" << (k_max + 1) * c
       << "\" y2=\"" << (b.height - l_min) * c << "\" stroke=\"" << line.color
       << "\" stroke-width=\"2\"/>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace diagsum
