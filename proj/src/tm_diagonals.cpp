#include "diagsum/tm_diagonals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "diagsum/dsl.hpp"
#include "diagsum/sumset.hpp"

namespace diagsum {

PairWord sigma_diag(const PairWord& w) {
  PairWord out;
  out.reserve(2 * w.size());
  for (PairLetter p : w) {
    out.push_back(PairLetter{p.first, static_cast<Letter>(p.second ^ 1)});
    out.push_back(PairLetter{static_cast<Letter>(p.first ^ 1), p.second});
  }
  return out;
}

PairWord beta_diag(const PairWord& w) {
  if (w.size() % 2 != 0)
    throw std::invalid_argument("beta_diag: odd-length word");
  PairWord out;
  out.reserve(w.size() / 2);
  for (std::size_t t = 0; t + 1 < w.size(); t += 2)
    out.push_back(PairLetter{w[t].first, w[t + 1].second});
  return out;
}

PairWord beta_adjacent(const PairWord& w) {
  PairWord out;
  if (w.size() < 2) return out;
  out.reserve(w.size() - 1);
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    out.push_back(PairLetter{w[t].first, w[t + 1].second});
  return out;
}

namespace {

MorphicSystem thue_morse() { return *builtin_system("thue_morse"); }

std::string show(const PairWord& w) {
  std::string s;
  s.reserve(w.size());
  for (PairLetter p : w) s += pair_glyph(p);
  return s;
}

}  // namespace

CheckReport verify_recursions(std::int64_t n_max, const Limits& limits) {
  if (n_max < 1) throw std::invalid_argument("verify_recursions: n_max < 1");
  MorphicSystem s = thue_morse();
  Word x = prefix(s, static_cast<std::size_t>(2 * n_max + 2), limits);
  CheckReport r;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    PairWord dn = diagonal_from_prefix(x, s.index_base, n).letters;
    PairWord d2n = diagonal_from_prefix(x, s.index_base, 2 * n).letters;
    if (d2n != sigma_diag(dn)) {
      r.ok = false;
      r.first_failure = n;
      std::ostringstream os;
      os << "d_" << 2 * n << " != sigma(d_" << n << "): got " << show(d2n)
         << ", sigma gives " << show(sigma_diag(dn));
      r.detail = os.str();
      return r;
    }
    PairWord odd = diagonal_from_prefix(x, s.index_base, 2 * n + 1).letters;
    PairWord even = diagonal_from_prefix(x, s.index_base, 2 * n + 2).letters;
    if (odd != beta_adjacent(even)) {
      r.ok = false;
      r.first_failure = n;
      std::ostringstream os;
      os << "d_" << 2 * n + 1 << " != beta(d_" << 2 * n + 2 << ")";
      r.detail = os.str();
      return r;
    }
  }
  return r;
}

CheckReport verify_purity(std::int64_t max_index, const Limits& limits) {
  if (max_index < 1) throw std::invalid_argument("verify_purity: max_index < 1");
  MorphicSystem s = thue_morse();
  Word x = prefix(s, static_cast<std::size_t>(max_index), limits);
  CheckReport r;
  for (int m = 0; (std::int64_t{1} << m) <= max_index; ++m) {
    const std::int64_t idx = std::int64_t{1} << m;
    PairWord d = diagonal_from_prefix(x, s.index_base, idx).letters;
    const bool want_equal = (m % 2 == 0);  // {a,d}: components equal
    for (std::size_t t = 0; t < d.size(); ++t) {
      const bool equal = d[t].first == d[t].second;
      if (equal != want_equal) {
        r.ok = false;
        r.first_failure = idx;
        std::ostringstream os;
        os << "d_" << idx << " position " << t << " is " << pair_glyph(d[t])
           << ", outside " << (want_equal ? "{a,d}" : "{b,c}");
        r.detail = os.str();
        return r;
      }
    }
  }
  return r;
}

CheckReport verify_block_properties(int n_lo, int n_hi,
                                    const BlockPropertyRules& rules,
                                    const Limits& limits) {
  if (n_lo < 1 || n_lo > n_hi)
    throw std::invalid_argument("verify_block_properties: bad level range");
  MorphicSystem s = thue_morse();
  ProductSubstitution psub = product(s.sub);
  const PairLetter target{0, 0};
  CheckReport r;
  for (int n = n_lo; n <= n_hi; ++n) {
    const std::int64_t S = std::int64_t{1} << n;
    // Allowed red offsets at this block size.
    std::vector<bool> allowed(static_cast<std::size_t>(2 * S - 1), false);
    for (std::int64_t i = 1; i <= std::min(rules.small_band, S); ++i)
      allowed[static_cast<std::size_t>(i - 1)] = true;
    for (std::int64_t i = std::max<std::int64_t>(1, S - rules.upper_band);
         i <= S - 1; ++i)
      allowed[static_cast<std::size_t>(S - 1 + i)] = true;
    for (std::int64_t i = std::int64_t{1} << rules.min_power_exp; i <= S;
         i *= 2) {
      allowed[static_cast<std::size_t>(i - 1)] = true;
      if (i <= S - 1) allowed[static_cast<std::size_t>(S - 1 + i)] = true;
    }

    for (int letter = 0; letter < 4; ++letter) {
      const PairLetter p{static_cast<Letter>(letter / 2),
                         static_cast<Letter>(letter % 2)};
      DiagonalProfile prof = block_diagonal_profile(psub, p, n, target, limits);
      std::vector<std::int64_t> red = prof.red_offsets();
      {
        std::ostringstream os;
        os << "n=" << n << " letter=" << pair_glyph(p) << " red=";
        for (std::size_t i = 0; i < red.size(); ++i) {
          if (i) os << ',';
          os << DiagonalProfile::label(red[i], S);
        }
        r.notes.push_back(os.str());
      }
      for (std::int64_t o : red) {
        if (!allowed[static_cast<std::size_t>(o)]) {
          r.ok = false;
          if (!r.first_failure) r.first_failure = n;
          std::ostringstream os;
          os << "n=" << n << " letter=" << pair_glyph(p) << " red offset " << o
             << " (" << DiagonalProfile::label(o, S) << ") outside allowance";
          r.detail = os.str();
          return r;
        }
      }
    }
  }
  return r;
}

namespace {

std::vector<std::int64_t> power_complement(std::int64_t N, int first_exp,
                                           std::vector<std::int64_t> extra) {
  // extra ∪ {2^(first_exp + 2m) - 1 <= N}
  std::vector<std::int64_t> out = std::move(extra);
  for (int e = first_exp; e < 62; e += 2) {
    std::int64_t v = (std::int64_t{1} << e) - 1;
    if (v > N) break;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClosedFormReport tm_closed_form_check(std::int64_t N, const Limits& limits) {
  if (N < 8) throw std::invalid_argument("tm_closed_form_check: N < 8");
  MorphicSystem s = thue_morse();
  ClosedFormReport r;
  std::ostringstream detail;

  auto run = [&](SumsetKind kind, const std::vector<std::int64_t>& expect,
                 bool& flag) {
    SumsetReport rep = complement_upto(SumsetQuery{s, kind}, N, limits);
    flag = (rep.complement == expect);
    if (!flag) {
      detail << kind_name(kind) << " complement deviates from closed form; ";
    }
  };

  run(SumsetKind::AA, power_complement(N, 1, {2, 4}), r.aa);
  run(SumsetKind::AB, power_complement(N, 2, {0}), r.ab);
  run(SumsetKind::BB, power_complement(N, 1, {0}), r.bb);
  r.detail = detail.str();
  return r;
}

}  // namespace diagsum
