#include "diagsum/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "diagsum/dsl.hpp"

namespace diagsum {

namespace {

std::string coded_glyphs(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (unsigned char b : w) s += static_cast<char>('0' + b);
  return s;
}

// Non-members among the base cases n in [index_base, threshold).
std::vector<std::int64_t> base_case_complement(const SumsetQuery& q,
                                               std::int64_t threshold,
                                               const Limits& limits) {
  const int base = q.system.index_base;
  std::vector<std::int64_t> out;
  for (std::int64_t n = base; n < threshold; ++n) {
    const bool member = n >= 2 * base && membership(q, n, limits);
    if (!member) out.push_back(n);
  }
  return out;
}

// True when some shift kills the window: w[W - k] is the second target.
bool window_killed(const Word& w, const std::vector<std::int64_t>& shifts,
                   Letter second) {
  const std::int64_t W = static_cast<std::int64_t>(w.size());
  for (std::int64_t k : shifts) {
    if (k < 1 || k > W) continue;
    if (static_cast<Letter>(w[static_cast<std::size_t>(W - k)]) == second)
      return true;
  }
  return false;
}

}  // namespace

SearchOutcome search_certificate(const SumsetQuery& q, std::int64_t k_max,
                                 const Limits& limits) {
  if (k_max < 1) throw std::invalid_argument("search_certificate: k_max < 1");
  const TargetPair t = targets(q.kind);

  std::vector<std::int64_t> cand =
      positions(q.system, t.first_symbol, k_max, limits);
  // A shift must reach into the window x_{n-W}..x_{n-1}, so k >= 1.
  cand.erase(std::remove_if(cand.begin(), cand.end(),
                            [](std::int64_t k) { return k < 1; }),
             cand.end());

  FactorSet fs = factors_upto(q.system, static_cast<int>(k_max), limits);

  // Width candidates: max(K) is always a position of the first target, so
  // only those widths can be minimal; k_max itself is tried last in case the
  // full window succeeds where no shorter one does.
  std::vector<std::int64_t> widths = cand;
  if (widths.empty() || widths.back() != k_max) widths.push_back(k_max);

  for (std::int64_t W : widths) {
    std::vector<Word> surviving = fs.of_length(static_cast<int>(W));
    std::vector<std::int64_t> usable;
    for (std::int64_t k : cand)
      if (k <= W) usable.push_back(k);

    std::vector<std::int64_t> K;
    while (!surviving.empty()) {
      std::int64_t best_k = -1;
      std::size_t best_kills = 0;
      for (std::int64_t k : usable) {
        if (std::find(K.begin(), K.end(), k) != K.end()) continue;
        std::size_t kills = 0;
        for (const Word& w : surviving)
          if (static_cast<Letter>(w[static_cast<std::size_t>(W - k)]) ==
              t.second_symbol)
            ++kills;
        if (kills > best_kills) {
          best_kills = kills;
          best_k = k;
        }
      }
      if (best_k < 0) break;  // some factor defeats every remaining shift
      K.push_back(best_k);
      surviving.erase(
          std::remove_if(surviving.begin(), surviving.end(),
                         [&](const Word& w) {
                           return static_cast<Letter>(w[static_cast<
                                      std::size_t>(W - best_k)]) ==
                                  t.second_symbol;
                         }),
          surviving.end());
    }

    if (surviving.empty() && !K.empty()) {
      std::sort(K.begin(), K.end());
      ShiftCertificate cert;
      cert.system_name = q.system.name;
      cert.kind = q.kind;
      cert.shifts = std::move(K);
      cert.window = W;
      cert.claimed_complement = base_case_complement(
          q, cert.threshold(q.system.index_base), limits);
      SearchOutcome out;
      out.certificate = std::move(cert);
      return out;
    }
  }

  // No width worked: report the lexicographically first full-width factor
  // that survives every candidate shift.
  SearchOutcome out;
  out.witness_width = k_max;
  for (const Word& w : fs.of_length(static_cast<int>(k_max))) {
    if (!window_killed(w, cand, t.second_symbol)) {
      out.defeating_factor = w;
      break;
    }
  }
  return out;
}

CertificateCheck verify_certificate(const SumsetQuery& q,
                                    const ShiftCertificate& cert,
                                    const Limits& limits) {
  CertificateCheck c;
  const int base = q.system.index_base;
  const TargetPair t = targets(q.kind);

  if (cert.system_name != q.system.name)
    c.failures.push_back("certificate names system '" + cert.system_name +
                         "', query uses '" + q.system.name + "'");
  if (cert.kind != q.kind)
    c.failures.push_back("certificate kind " + kind_name(cert.kind) +
                         " does not match query kind " + kind_name(q.kind));

  if (cert.shifts.empty()) c.failures.push_back("ill-formed: empty shift set");
  for (std::size_t i = 0; i < cert.shifts.size(); ++i) {
    if (cert.shifts[i] < 1) {
      c.failures.push_back("ill-formed: shift below 1");
      break;
    }
    if (i > 0 && cert.shifts[i] <= cert.shifts[i - 1]) {
      c.failures.push_back("ill-formed: shifts not strictly ascending");
      break;
    }
  }
  if (!cert.shifts.empty() && cert.shifts.back() > cert.window)
    c.failures.push_back("ill-formed: window smaller than the largest shift");
  if (!std::is_sorted(cert.claimed_complement.begin(),
                      cert.claimed_complement.end()))
    c.failures.push_back("ill-formed: claimed complement not ascending");
  if (!c.failures.empty()) return c;  // ok stays false

  // Shifts must be positions of the first target symbol.
  Word x = prefix(q.system,
                  static_cast<std::size_t>(cert.window - base + 1), limits);
  for (std::int64_t k : cert.shifts) {
    if (k < base ||
        static_cast<Letter>(x[static_cast<std::size_t>(k - base)]) !=
            t.first_symbol) {
      std::ostringstream os;
      os << "shift " << k << " is not a position of the first target symbol";
      c.failures.push_back(os.str());
    }
  }

  // Window property over every factor of the window length.
  FactorSet fs =
      factors_upto(q.system, static_cast<int>(cert.window), limits);
  for (const Word& w : fs.of_length(static_cast<int>(cert.window))) {
    if (!window_killed(w, cert.shifts, t.second_symbol)) {
      c.witness_factor = w;
      c.failures.push_back("window property fails for factor " +
                           coded_glyphs(w));
      break;
    }
  }

  // Base cases below the threshold must match the claimed complement.
  std::vector<std::int64_t> expected =
      base_case_complement(q, cert.threshold(base), limits);
  if (expected != cert.claimed_complement) {
    std::size_t i = 0;
    while (i < expected.size() && i < cert.claimed_complement.size() &&
           expected[i] == cert.claimed_complement[i])
      ++i;
    std::int64_t at;
    if (i < expected.size() && i < cert.claimed_complement.size())
      at = std::min(expected[i], cert.claimed_complement[i]);
    else if (i < expected.size())
      at = expected[i];
    else
      at = cert.claimed_complement[i];
    std::ostringstream os;
    os << "base-case mismatch at " << at;
    c.failures.push_back(os.str());
  }

  c.ok = c.failures.empty();
  return c;
}

std::string format_certificate(const ShiftCertificate& cert) {
  std::ostringstream os;
  os << "certificate\n";
  os << "system " << cert.system_name << "\n";
  os << "kind " << kind_name(cert.kind) << "\n";
  os << "K";
  for (std::int64_t k : cert.shifts) os << ' ' << k;
  os << "\nW " << cert.window << "\n";
  os << "complement";
  for (std::int64_t v : cert.claimed_complement) os << ' ' << v;
  os << "\n";
  return os.str();
}

namespace {

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

ShiftCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_header = false;
  ShiftCertificate cert;
  bool saw_system = false, saw_kind = false, saw_k = false, saw_w = false,
       saw_complement = false;

  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;

    if (!saw_header) {
      if (toks.size() != 1 || toks[0] != "certificate")
        throw ParseError(line_no, "expected 'certificate' header line");
      saw_header = true;
      continue;
    }
    const std::string& head = toks[0];
    if (head == "system") {
      if (saw_system) throw ParseError(line_no, "duplicate 'system' line");
      if (toks.size() != 2)
        throw ParseError(line_no, "usage: system <name>");
      cert.system_name = toks[1];
      saw_system = true;
    } else if (head == "kind") {
      if (saw_kind) throw ParseError(line_no, "duplicate 'kind' line");
      if (toks.size() != 2) throw ParseError(line_no, "usage: kind AA|AB|BB");
      auto k = parse_kind(toks[1]);
      if (!k) throw ParseError(line_no, "unknown kind '" + toks[1] + "'");
      cert.kind = *k;
      saw_kind = true;
    } else if (head == "K") {
      if (saw_k) throw ParseError(line_no, "duplicate 'K' line");
      for (std::size_t i = 1; i < toks.size(); ++i)
        cert.shifts.push_back(parse_int(toks[i], line_no));
      saw_k = true;
    } else if (head == "W") {
      if (saw_w) throw ParseError(line_no, "duplicate 'W' line");
      if (toks.size() != 2) throw ParseError(line_no, "usage: W <width>");
      cert.window = parse_int(toks[1], line_no);
      saw_w = true;
    } else if (head == "complement") {
      if (saw_complement)
        throw ParseError(line_no, "duplicate 'complement' line");
      for (std::size_t i = 1; i < toks.size(); ++i)
        cert.claimed_complement.push_back(parse_int(toks[i], line_no));
      saw_complement = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + head + "'");
    }
  }
  if (!saw_header) throw ParseError(0, "missing 'certificate' header");
  if (!saw_system) throw ParseError(0, "missing 'system' line");
  if (!saw_kind) throw ParseError(0, "missing 'kind' line");
  if (!saw_k) throw ParseError(0, "missing 'K' line");
  if (!saw_w) throw ParseError(0, "missing 'W' line");
  if (!saw_complement) throw ParseError(0, "missing 'complement' line");
  return cert;
}

}  // namespace diagsum
