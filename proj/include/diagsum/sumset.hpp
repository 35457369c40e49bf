#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagsum/substitution.hpp"

namespace diagsum {

// Which pair of coded-letter position sets gets summed. With
// A = {n : x_n = 0} and B = {n : x_n = 1}: AA = A+A, AB = A+B, BB = B+B.
enum class SumsetKind { AA, AB, BB };

std::string kind_name(SumsetKind kind);
std::optional<SumsetKind> parse_kind(const std::string& text);

// The ordered pair of coded symbols whose positions are summed.
struct TargetPair {
  Letter first_symbol = 0;
  Letter second_symbol = 0;
};

TargetPair targets(SumsetKind kind);

struct SumsetQuery {
  MorphicSystem system;
  SumsetKind kind = SumsetKind::AA;
};

// n is a member iff x_k = target.first and x_{n-k} = target.second for some
// k with both indices valid. Requires n >= 2*index_base.
bool membership(const SumsetQuery& q, std::int64_t n, const Limits& limits = {});

// Same decision against an already-generated coded prefix x (x[0] holds
// index index_base). first_positions must list, ascending, the indices of
// target.first within x. Scans k ascending with early exit.
bool membership_in_prefix(const Word& x, int index_base,
                          const std::vector<std::int64_t>& first_positions,
                          TargetPair target, std::int64_t n);

struct SumsetReport {
  std::string system_name;
  SumsetKind kind = SumsetKind::AA;
  std::int64_t scan_bound = 0;
  // Every non-member of the sumset in [index_base, scan_bound], ascending.
  std::vector<std::int64_t> complement;
  // The complement entries smaller than the least possible sum. Always a
  // prefix of `complement`: nothing below min(first)+min(second) is a sum.
  std::vector<std::int64_t> below_min;
  // Largest difference between consecutive complement entries (0 if fewer
  // than two).
  std::int64_t largest_gap = 0;
  // Set when an oracle cross-check ran alongside the scan.
  std::optional<bool> oracle_agrees;

  // `kind=AA N=10000 complement=1,3 below_min=1 oracle=ok`
  std::string to_line() const;
  // One `value,below_min` row per complement element, plus a header.
  std::string to_csv() const;
};

// Exact complement within [index_base, N], one shared prefix, membership
// scanned per n.
SumsetReport complement_upto(const SumsetQuery& q, std::int64_t N,
                             const Limits& limits = {});

// Independent brute force: enumerate both position sets and mark all
// pairwise sums <= N. Shares no code with the membership scan.
std::vector<std::int64_t> oracle_complement(const SumsetQuery& q,
                                            std::int64_t N,
                                            const Limits& limits = {});

struct CrossCheck {
  bool ok = false;
  std::optional<std::int64_t> first_mismatch;
};

CrossCheck cross_check(const SumsetQuery& q, std::int64_t N,
                       const Limits& limits = {});

}  // namespace diagsum
