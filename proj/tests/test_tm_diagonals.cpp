#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "diagsum/dsl.hpp"
#include "diagsum/product2d.hpp"
#include "diagsum/tm_diagonals.hpp"
#include "doctest.h"

using namespace diagsum;

namespace {

PairWord pword(const std::string& glyphs) {
  PairWord w;
  for (char g : glyphs) w.push_back(pair_from_glyph(g));
  return w;
}

std::string text(const PairWord& w) {
  std::string s;
  for (PairLetter p : w) s.push_back(pair_glyph(p));
  return s;
}

}  // namespace

TEST_CASE("sigma_diag on letters and squares") {
  CHECK(text(sigma_diag(pword("a"))) == "bc");
  CHECK(text(sigma_diag(pword("b"))) == "ad");
  CHECK(text(sigma_diag(pword("c"))) == "da");
  CHECK(text(sigma_diag(pword("d"))) == "cb");
  CHECK(text(sigma_diag(sigma_diag(pword("a")))) == "adda");
  CHECK(text(sigma_diag(sigma_diag(pword("b")))) == "bccb");
  CHECK(text(sigma_diag(sigma_diag(pword("c")))) == "cbbc");
  CHECK(text(sigma_diag(sigma_diag(pword("d")))) == "daad");
}

TEST_CASE("beta_diag is a left inverse of sigma_diag") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(1, 200);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    PairWord w;
    int l = len(rng);
    for (int i = 0; i < l; ++i)
      w.push_back(pair_from_glyph(static_cast<char>('a' + letter(rng))));
    CHECK(beta_diag(sigma_diag(w)) == w);
  }
  CHECK_THROWS_AS(beta_diag(pword("abc")), std::invalid_argument);
}

TEST_CASE("beta_adjacent steps one diagonal down") {
  CHECK(text(beta_adjacent(pword("adcbda"))) == "bcdbc");  // d_6 -> d_5
  CHECK(beta_adjacent(pword("ab")).size() == 1);
  MorphicSystem tm = *builtin_system("thue_morse");
  for (std::int64_t n : {2, 3, 5, 9, 33, 250}) {
    DiagonalWord big = diagonal(tm, n + 1);
    DiagonalWord small = diagonal(tm, n);
    CHECK(beta_adjacent(big.letters) == small.letters);
  }
}

TEST_CASE("both diagonal recursions hold letter for letter") {
  CheckReport r = verify_recursions(512);
  CHECK(r.ok);
  CHECK_FALSE(r.first_failure.has_value());

  // spot-check the even recursion directly: d_{2n} = sigma(d_n)
  MorphicSystem tm = *builtin_system("thue_morse");
  for (std::int64_t n : {1, 2, 7, 40, 301}) {
    CHECK(sigma_diag(diagonal(tm, n).letters) ==
          diagonal(tm, 2 * n).letters);
  }
}

TEST_CASE("power diagonals are pure") {
  CHECK(verify_purity(2048).ok);

  MorphicSystem tm = *builtin_system("thue_morse");
  for (int m = 0; m <= 11; ++m) {
    DiagonalWord d = diagonal(tm, std::int64_t{1} << m);
    bool even = (m % 2 == 0);
    for (PairLetter p : d.letters) {
      // even powers stay on {a, d}, odd powers on {b, c}
      CHECK((p.first == p.second) == even);
    }
  }
}

TEST_CASE("block properties hold through level four") {
  CheckReport r = verify_block_properties(3, 4);
  CHECK(r.ok);
  CHECK(r.detail.empty());
  // observed red sets are reported for every block
  REQUIRE(r.notes.size() == 8);
  CHECK(r.notes[0] == "n=3 letter=a red=d2,d3,d5,d8,d6+,d7+");
  CHECK(r.notes[1] == "n=3 letter=b red=d1,d4,d4+,d7+");
  CHECK(r.notes[3] == "n=3 letter=d red=d1,d2,d8,d3+,d5+,d6+");
}

TEST_CASE("level five breaks the literal allowance") {
  // tau^5(a) has a red diagonal at d+_24 = 2^5 - 2^3, which none of the
  // three allowed families contains; the checker reports it rather than
  // widen the rule.
  CheckReport r = verify_block_properties(4, 8);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == 5);
  CHECK(r.detail.find("d24+") != std::string::npos);
}

TEST_CASE("each allowance family is load-bearing at level four") {
  BlockPropertyRules narrow_small;
  narrow_small.small_band = 4;  // tau^4(a) has red d_5
  CHECK_FALSE(verify_block_properties(4, 4, narrow_small).ok);

  BlockPropertyRules narrow_upper;
  narrow_upper.upper_band = 4;  // tau^4(a) has red d+_11 = 2^4 - 5
  CHECK_FALSE(verify_block_properties(4, 4, narrow_upper).ok);

  BlockPropertyRules higher_power;
  higher_power.min_power_exp = 3;  // tau^4(b) has red d_4
  CHECK_FALSE(verify_block_properties(4, 4, higher_power).ok);

  CHECK(verify_block_properties(4, 4).ok);
}

TEST_CASE("n=3 letter-a profile: exactly d6+ and d7+ above the diagonal") {
  MorphicSystem tm = *builtin_system("thue_morse");
  DiagonalProfile prof = block_diagonal_profile(
      product(tm.sub), PairLetter{0, 0}, 3, PairLetter{0, 0});
  std::vector<std::string> upper_red;
  for (std::int64_t o : prof.red_offsets()) {
    if (o >= prof.block_size)
      upper_red.push_back(DiagonalProfile::label(o, prof.block_size));
  }
  CHECK(upper_red == std::vector<std::string>{"d6+", "d7+"});
}

TEST_CASE("closed forms for all three kinds") {
  ClosedFormReport r = tm_closed_form_check(4096);
  CHECK(r.aa);
  CHECK(r.ab);
  CHECK(r.bb);
  CHECK(r.ok());
  CHECK(r.detail.empty());
  CHECK_THROWS_AS(tm_closed_form_check(4), std::invalid_argument);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(verify_recursions(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_purity(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_block_properties(4, 3), std::invalid_argument);
}
