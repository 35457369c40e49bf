#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagsum/factors.hpp"
#include "diagsum/sumset.hpp"

namespace diagsum {

// A finite proof object: K is a set of positions of the first target symbol,
// W >= max(K) a window width. If every length-W factor w of the coded word
// has some k in K with w[W-k] equal to the second target symbol, then every
// n >= W + index_base is a sumset member (the window x_{n-W}..x_{n-1} is a
// factor), so the complement is exactly the claimed finite set of base cases.
struct ShiftCertificate {
  std::string system_name;
  SumsetKind kind = SumsetKind::AA;
  std::vector<std::int64_t> shifts;  // K, ascending, each >= 1
  std::int64_t window = 0;           // W
  std::vector<std::int64_t> claimed_complement;

  std::int64_t threshold(int index_base) const { return window + index_base; }
};

struct SearchOutcome {
  std::optional<ShiftCertificate> certificate;
  // When no certificate exists up to k_max: a length-k_max factor that
  // defeats every candidate shift at once.
  Word defeating_factor;
  std::int64_t witness_width = 0;
};

// Tries window widths ascending (over positions of the first target symbol,
// which are the only useful widths); for each width grows K greedily by the
// shift that kills the most surviving factors, ties to the smaller shift.
SearchOutcome search_certificate(const SumsetQuery& q, std::int64_t k_max,
                                 const Limits& limits = {});

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> failures;
  std::optional<Word> witness_factor;  // a window-property violation, if any
};

// Independent re-check: well-formedness, K inside the first target's
// positions, the window property over a freshly computed factor set, and the
// base-case scan against the claimed complement.
CertificateCheck verify_certificate(const SumsetQuery& q,
                                    const ShiftCertificate& cert,
                                    const Limits& limits = {});

// Line-oriented text form:
//   certificate
//   system fibonacci
//   kind AA
//   K 1 3 4
//   W 4
//   complement 1 3
std::string format_certificate(const ShiftCertificate& cert);
ShiftCertificate parse_certificate(const std::string& text);

}  // namespace diagsum
