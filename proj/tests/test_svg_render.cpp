#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "diagsum/dsl.hpp"
#include "diagsum/svg_render.hpp"
#include "doctest.h"

using namespace diagsum;

namespace {

// Minimal XML well-formedness scan: tag nesting, quoted attributes, one
// root element, no stray '<' or '&'. Returns an empty string when fine.
std::string xml_problem(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  const std::size_t n = doc.size();
  int roots = 0;

  auto fail = [&](const std::string& why) {
    return why + " near byte " + std::to_string(i);
  };

  while (i < n) {
    char c = doc[i];
    if (c == '<') {
      if (i + 1 >= n) return fail("dangling '<'");
      bool closing = doc[i + 1] == '/';
      std::size_t p = i + (closing ? 2 : 1);
      std::size_t name_start = p;
      while (p < n && (std::isalnum(static_cast<unsigned char>(doc[p])) ||
                       doc[p] == '-' || doc[p] == '_'))
        ++p;
      if (p == name_start) return fail("tag without a name");
      std::string name = doc.substr(name_start, p - name_start);

      // attributes until '>' or '/>'
      bool self_closed = false;
      while (p < n && doc[p] != '>') {
        if (doc[p] == '/' && p + 1 < n && doc[p + 1] == '>') {
          self_closed = true;
          ++p;
          break;
        }
        if (doc[p] == '"') {  // attribute value
          std::size_t q = doc.find('"', p + 1);
          if (q == std::string::npos) return fail("unterminated attribute");
          if (doc.find('<', p + 1) < q) return fail("'<' inside attribute");
          p = q;
        }
        ++p;
      }
      if (p >= n) return fail("unterminated tag");
      i = p + 1;

      if (closing) {
        if (self_closed) return fail("closing tag with '/>'");
        if (stack.empty() || stack.back() != name)
          return fail("mismatched </" + name + ">");
        stack.pop_back();
      } else if (!self_closed) {
        if (stack.empty()) ++roots;
        stack.push_back(name);
      } else if (stack.empty()) {
        ++roots;
      }
      continue;
    }
    if (c == '&') {
      static const char* entities[] = {"&amp;", "&lt;", "&gt;", "&quot;",
                                       "&apos;"};
      bool ok = false;
      for (const char* e : entities)
        ok = ok || doc.compare(i, std::string(e).size(), e) == 0;
      if (!ok) return fail("bare '&'");
    }
    if (c == '>') return fail("bare '>'");
    ++i;
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  if (roots != 1) return "expected exactly one root element";
  return "";
}

int count_of(const std::string& doc, const std::string& needle) {
  int count = 0;
  for (std::size_t p = doc.find(needle); p != std::string::npos;
       p = doc.find(needle, p + 1))
    ++count;
  return count;
}

Block2D expansion(const char* name, char letter, int n) {
  MorphicSystem s = *builtin_system(name);
  return expand2d(product(s.sub), pair_from_glyph(letter), n);
}

}  // namespace

TEST_CASE("expansion blocks render to well-formed SVG") {
  RenderSpec spec;
  spec.block = expansion("fibonacci", 'a', 2);
  spec.palette = default_palette();
  std::string svg = render_svg(spec);

  CHECK(xml_problem(svg) == "");
  CHECK(count_of(svg, "<rect") == 9);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0);

  // 3x3 cells at the default 16px
  CHECK(svg.find("width=\"48\" height=\"48\" viewBox=\"0 0 48 48\"") !=
        std::string::npos);

  // bottom-left cell is an 'a': light green, drawn at y = (3-1)*16
  CHECK(svg.find("<rect x=\"0\" y=\"32\" width=\"16\" height=\"16\" "
                 "fill=\"#b3ffb3\"") != std::string::npos);
}

TEST_CASE("the level-four thue_morse block") {
  RenderSpec spec;
  spec.block = expansion("thue_morse", 'a', 4);
  spec.palette = default_palette();
  spec.overlays = target_overlays(spec.block, PairLetter{0, 0});
  std::string svg = render_svg(spec);

  CHECK(xml_problem(svg) == "");
  CHECK(count_of(svg, "<rect") == 256);
  CHECK(count_of(svg, "<line") == 31);           // 2*16 - 1 anti-diagonals
  CHECK(count_of(svg, "stroke=\"#d73027\"") == 8);   // red: no 'a' on them
  CHECK(count_of(svg, "stroke=\"#1a9850\"") == 23);  // green: the rest
}

TEST_CASE("default palette matches the figures") {
  auto pal = default_palette();
  CHECK(pal.at(PairLetter{0, 0}) == "#b3ffb3");
  CHECK(pal.at(PairLetter{0, 1}) == "#ffffb3");
  CHECK(pal.at(PairLetter{1, 0}) == "#b3b3ff");
  CHECK(pal.at(PairLetter{1, 1}) == "#ffb3b3");
}

TEST_CASE("overlay count limit and colors") {
  Block2D block = expansion("thue_morse", 'a', 3);
  auto all = target_overlays(block, PairLetter{0, 0});
  CHECK(all.size() == 15);

  auto five = target_overlays(block, PairLetter{0, 0}, 5);
  REQUIRE(five.size() == 5);
  for (std::size_t i = 0; i < five.size(); ++i) {
    CHECK(five[i].offset == static_cast<std::int64_t>(i));
    CHECK(five[i].color == all[i].color);
  }

  // the d6+/d7+ offsets of tau^3(a) are red, the main diagonal is green
  CHECK(all[13].color == "#d73027");
  CHECK(all[14].color == "#d73027");
  CHECK(all[7].color == "#1a9850");
}

TEST_CASE("cell labels are emitted per cell") {
  RenderSpec spec;
  spec.block = expansion("thue_morse", 'a', 2);
  spec.palette = default_palette();
  spec.label_cells = true;
  std::string svg = render_svg(spec);
  CHECK(xml_problem(svg) == "");
  CHECK(count_of(svg, "<text") == 16);
  CHECK(count_of(svg, ">a</text>") == 4);  // acca/bddb rows have 4 a's
  CHECK(count_of(svg, ">d</text>") == 4);
}

TEST_CASE("renderer rejects broken specs") {
  RenderSpec empty;
  empty.palette = default_palette();
  CHECK_THROWS_AS(render_svg(empty), std::invalid_argument);

  RenderSpec missing;
  missing.block = expansion("thue_morse", 'a', 2);
  missing.palette = default_palette();
  missing.palette.erase(PairLetter{1, 1});
  CHECK_THROWS_AS(render_svg(missing), std::invalid_argument);

  RenderSpec bad_overlay;
  bad_overlay.block = expansion("thue_morse", 'a', 2);
  bad_overlay.palette = default_palette();
  bad_overlay.overlays = {OverlayLine{7, "#000000"}};  // offsets run 0..6
  CHECK_THROWS_AS(render_svg(bad_overlay), std::invalid_argument);
}

TEST_CASE("cell size scales the canvas") {
  RenderSpec spec;
  spec.block = expansion("von_neumann", 'd', 2);  // |psi^2(1)| = 7
  spec.palette = default_palette();
  spec.cell_size = 10;
  std::string svg = render_svg(spec);
  CHECK(xml_problem(svg) == "");
  CHECK(svg.find("width=\"70\" height=\"70\"") != std::string::npos);
}

TEST_CASE("every rendering option combination stays well-formed") {
  std::mt19937 rng(7777);
  std::uniform_int_distribution<int> level(0, 3);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  const char* names[] = {"fibonacci", "thue_morse", "von_neumann"};
  for (int trial = 0; trial < 60; ++trial) {
    RenderSpec spec;
    spec.block = expansion(names[trial % 3],
                           static_cast<char>('a' + letter(rng)), level(rng));
    spec.palette = default_palette();
    spec.label_cells = coin(rng) == 1;
    spec.cell_size = 4 + 4 * coin(rng);
    if (coin(rng) == 1) {
      spec.overlays = target_overlays(
          spec.block, PairLetter{static_cast<Letter>(coin(rng)),
                                 static_cast<Letter>(coin(rng))});
    }
    std::string svg = render_svg(spec);
    CHECK(xml_problem(svg) == "");
    CHECK(count_of(svg, "<rect") == spec.block.width * spec.block.height);
  }
}
