#include "diagsum/sumset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diagsum {

std::string kind_name(SumsetKind kind) {
  switch (kind) {
    case SumsetKind::AA:
      return "AA";
    case SumsetKind::AB:
      return "AB";
    case SumsetKind::BB:
      return "BB";
  }
  throw std::logic_error("kind_name: unknown kind");
}

std::optional<SumsetKind> parse_kind(const std::string& text) {
  if (text == "AA") return SumsetKind::AA;
  if (text == "AB") return SumsetKind::AB;
  if (text == "BB") return SumsetKind::BB;
  return std::nullopt;
}

TargetPair targets(SumsetKind kind) {
  switch (kind) {
    case SumsetKind::AA:
      return TargetPair{0, 0};
    case SumsetKind::AB:
      return TargetPair{0, 1};
    case SumsetKind::BB:
      return TargetPair{1, 1};
  }
  throw std::logic_error("targets: unknown kind");
}

bool membership(const SumsetQuery& q, std::int64_t n, const Limits& limits) {
  const int base = q.system.index_base;
  if (n < 2 * base)
    throw std::invalid_argument("membership: n below the least index sum");
  const TargetPair t = targets(q.kind);
  Word x = prefix(q.system, static_cast<std::size_t>(n - 2 * base + 1), limits);
  for (std::int64_t k = base; k <= n - base; ++k) {
    if (static_cast<Letter>(x[static_cast<std::size_t>(k - base)]) ==
            t.first_symbol &&
        static_cast<Letter>(x[static_cast<std::size_t>(n - k - base)]) ==
            t.second_symbol)
      return true;
  }
  return false;
}

bool membership_in_prefix(const Word& x, int index_base,
                          const std::vector<std::int64_t>& first_positions,
                          TargetPair target, std::int64_t n) {
  const std::int64_t hi = n - index_base;
  for (std::int64_t p : first_positions) {
    if (p > hi) break;
    const std::int64_t off = n - p - index_base;
    if (off < 0 || off >= static_cast<std::int64_t>(x.size()))
      throw std::invalid_argument("membership_in_prefix: prefix too short");
    if (static_cast<Letter>(x[static_cast<std::size_t>(off)]) ==
        target.second_symbol)
      return true;
  }
  return false;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string SumsetReport::to_line() const {
  std::ostringstream os;
  os << "kind=" << kind_name(kind) << " N=" << scan_bound
     << " complement=" << join(complement) << " below_min=" << join(below_min)
     << " oracle="
     << (oracle_agrees ? (*oracle_agrees ? "ok" : "fail") : "skipped");
  return os.str();
}

std::string SumsetReport::to_csv() const {
  std::string s = "value,below_min\n";
  for (std::int64_t v : complement) {
    s += std::to_string(v);
    s += std::binary_search(below_min.begin(), below_min.end(), v) ? ",1\n"
                                                                   : ",0\n";
  }
  return s;
}

SumsetReport complement_upto(const SumsetQuery& q, std::int64_t N,
                             const Limits& limits) {
  const int base = q.system.index_base;
  if (N < 2 * base)
    throw std::invalid_argument("complement_upto: N below the least index sum");
  const TargetPair t = targets(q.kind);
  // One shared coded prefix covering every index the scan touches: the pair
  // (k, n-k) never looks past index N - base.
  Word x = prefix(q.system, static_cast<std::size_t>(N - 2 * base + 1), limits);

  std::vector<std::int64_t> first_positions;
  std::optional<std::int64_t> min_first, min_second;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t idx = static_cast<std::int64_t>(i) + base;
    if (static_cast<Letter>(x[i]) == t.first_symbol) {
      first_positions.push_back(idx);
      if (!min_first) min_first = idx;
    }
    if (!min_second && static_cast<Letter>(x[i]) == t.second_symbol)
      min_second = idx;
  }

  SumsetReport r;
  r.system_name = q.system.name;
  r.kind = q.kind;
  r.scan_bound = N;
  for (std::int64_t n = base; n <= N; ++n)
    if (!membership_in_prefix(x, base, first_positions, t, n))
      r.complement.push_back(n);

  std::optional<std::int64_t> min_sum;
  if (min_first && min_second) min_sum = *min_first + *min_second;
  if (!min_sum) {
    r.below_min = r.complement;  // no sums exist at all within the scan
  } else {
    for (std::int64_t v : r.complement) {
      if (v >= *min_sum) break;  // complement is ascending
      r.below_min.push_back(v);
    }
  }
  for (std::size_t i = 1; i < r.complement.size(); ++i)
    r.largest_gap =
        std::max(r.largest_gap, r.complement[i] - r.complement[i - 1]);
  return r;
}

std::vector<std::int64_t> oracle_complement(const SumsetQuery& q,
                                            std::int64_t N,
                                            const Limits& limits) {
  const int base = q.system.index_base;
  if (N < 2 * base)
    throw std::invalid_argument(
        "oracle_complement: N below the least index sum");
  const TargetPair t = targets(q.kind);
  std::vector<std::int64_t> P =
      positions(q.system, t.first_symbol, N - base, limits);
  std::vector<std::int64_t> Q =
      positions(q.system, t.second_symbol, N - base, limits);

  // Budget the quadratic pass before running it.
  std::uint64_t work = 0;
  for (std::int64_t p : P) {
    work += static_cast<std::uint64_t>(
        std::upper_bound(Q.begin(), Q.end(), N - p) - Q.begin());
    if (work > static_cast<std::uint64_t>(limits.max_cells))
      throw ResourceLimitError("oracle_complement: pair budget exceeded");
  }

  std::vector<bool> member(static_cast<std::size_t>(N) + 1, false);
  for (std::int64_t p : P) {
    for (std::int64_t qq : Q) {
      if (p + qq > N) break;
      member[static_cast<std::size_t>(p + qq)] = true;
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = base; n <= N; ++n)
    if (!member[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

CrossCheck cross_check(const SumsetQuery& q, std::int64_t N,
                       const Limits& limits) {
  SumsetReport r = complement_upto(q, N, limits);
  std::vector<std::int64_t> o = oracle_complement(q, N, limits);
  CrossCheck c;
  c.ok = (r.complement == o);
  if (!c.ok) {
    std::size_t i = 0;
    while (i < r.complement.size() && i < o.size() &&
           r.complement[i] == o[i])
      ++i;
    if (i < r.complement.size() && i < o.size())
      c.first_mismatch = std::min(r.complement[i], o[i]);
    else if (i < r.complement.size())
      c.first_mismatch = r.complement[i];
    else
      c.first_mismatch = o[i];
  }
  return c;
}

}  // namespace diagsum
