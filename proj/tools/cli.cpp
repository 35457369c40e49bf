#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "diagsum/certificate.hpp"
#include "diagsum/dsl.hpp"
#include "diagsum/product2d.hpp"
#include "diagsum/substitution.hpp"
#include "diagsum/sumset.hpp"
#include "diagsum/svg_render.hpp"
#include "diagsum/tm_diagonals.hpp"

namespace diagsum {

namespace {

std::string builtin_list() {
  std::string s;
  for (const auto& n : builtin_names()) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

MorphicSystem resolve_system(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in)
      throw std::invalid_argument("cannot open system file '" + file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
  }
  if (name.empty())
    throw std::invalid_argument("no system given (use --system or --file)");
  auto s = builtin_system(name);
  if (!s)
    throw std::invalid_argument("unknown system '" + name +
                                "' (built-ins: " + builtin_list() + ")");
  return *s;
}

PairLetter parse_pair_letter(const std::string& txt, const MorphicSystem& s) {
  const Alphabet& alph = s.sub.alphabet;
  if (txt.size() == 1) {
    if (txt[0] >= 'a' && txt[0] <= 'd' && alph.size() <= 2)
      return pair_from_glyph(txt[0]);
    throw std::invalid_argument(
        "pair letter '" + txt +
        "': use a|b|c|d (binary alphabets) or two alphabet glyphs");
  }
  if (txt.size() == 2) {
    auto f = alph.find(txt[0]);
    auto g = alph.find(txt[1]);
    if (f && g) return PairLetter{*f, *g};
  }
  throw std::invalid_argument("pair letter '" + txt +
                              "' is not two glyphs of the alphabet");
}

SumsetKind require_kind(const std::string& txt) {
  auto k = parse_kind(txt);
  if (!k)
    throw std::invalid_argument("kind must be AA, AB, or BB (got '" + txt +
                                "')");
  return *k;
}

std::string coded_glyphs(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (unsigned char b : w) s += static_cast<char>('0' + b);
  return s;
}

// Smallest iterate of the start letter that reaches `length` raw letters.
Word raw_prefix(const MorphicSystem& s, std::size_t length,
                const Limits& limits) {
  int m = 0;
  while (s.sub.image_lengths(m, length)[s.start] < length) {
    if (++m > 64 * 1024)
      throw ResourceLimitError("word: expansion depth limit reached");
  }
  Word w = s.sub.iterate(s.start, m, limits);
  w.resize(length);
  return w;
}

struct SystemOpts {
  std::string name;
  std::string file;
};

void add_system_opts(CLI::App* sub, SystemOpts& o) {
  auto* sys = sub->add_option("-s,--system", o.name, "built-in system name");
  auto* file =
      sub->add_option("-f,--file", o.file, "system definition file (DSL)");
  sys->excludes(file);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"sumsets of letter positions in substitution fixed points"};
  app.name("diagsum");
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--max-length", limits.max_length,
                 "cap on generated word length");
  app.add_option("--max-cells", limits.max_cells,
                 "cap on 2D block area and quadratic work");

  int exit_code = 0;

  // ---- expand ----
  auto* expand_cmd =
      app.add_subcommand("expand", "print a 2D expansion block as text");
  SystemOpts expand_sys;
  int expand_n = 0;
  std::string expand_letter;
  add_system_opts(expand_cmd, expand_sys);
  expand_cmd->add_option("-n,--iterations", expand_n, "expansion level")
      ->required();
  expand_cmd->add_option("--letter", expand_letter,
                         "pair letter (a..d or two glyphs); default start pair");
  expand_cmd->fallthrough();
  expand_cmd->callback([&] {
    MorphicSystem s = resolve_system(expand_sys.name, expand_sys.file);
    PairLetter p{static_cast<Letter>(s.start), static_cast<Letter>(s.start)};
    if (!expand_letter.empty()) p = parse_pair_letter(expand_letter, s);
    Block2D b = expand2d(product(s.sub), p, expand_n, limits);
    out << b.to_text(s.sub.alphabet) << "\n";
  });

  // ---- word ----
  auto* word_cmd =
      app.add_subcommand("word", "print a prefix of the fixed point");
  SystemOpts word_sys;
  std::size_t word_len = 0;
  bool word_raw = false;
  add_system_opts(word_cmd, word_sys);
  word_cmd->add_option("-l,--length", word_len, "prefix length")->required();
  word_cmd->add_flag("--raw", word_raw, "print before the coding is applied");
  word_cmd->fallthrough();
  word_cmd->callback([&] {
    MorphicSystem s = resolve_system(word_sys.name, word_sys.file);
    if (word_raw) {
      out << s.sub.alphabet.render(raw_prefix(s, word_len, limits)) << "\n";
    } else {
      out << coded_glyphs(prefix(s, word_len, limits)) << "\n";
    }
  });

  // ---- diagonal ----
  auto* diag_cmd = app.add_subcommand(
      "diagonal", "print the diagonal word d_n over a,b,c,d");
  SystemOpts diag_sys;
  std::int64_t diag_n = 0;
  add_system_opts(diag_cmd, diag_sys);
  diag_cmd->add_option("-n,--index", diag_n, "diagonal index")->required();
  diag_cmd->fallthrough();
  diag_cmd->callback([&] {
    MorphicSystem s = resolve_system(diag_sys.name, diag_sys.file);
    DiagonalWord d = diagonal(s, diag_n, limits);
    std::string line;
    for (PairLetter p : d.letters) line += pair_glyph(p);
    out << line << "\n";
  });

  // ---- sumset ----
  auto* sum_cmd = app.add_subcommand(
      "sumset", "complement of a sumset of letter positions up to a bound");
  SystemOpts sum_sys;
  std::string sum_kind;
  std::int64_t sum_max = 0;
  std::string sum_format = "text";
  bool sum_oracle = false;
  add_system_opts(sum_cmd, sum_sys);
  sum_cmd->add_option("-k,--kind", sum_kind, "AA, AB, or BB")->required();
  sum_cmd->add_option("-m,--max", sum_max, "scan bound N")->required();
  sum_cmd->add_option("--format", sum_format, "text or csv");
  sum_cmd->add_flag("--oracle", sum_oracle,
                    "cross-check against the brute-force oracle");
  sum_cmd->fallthrough();
  sum_cmd->callback([&] {
    if (sum_format != "text" && sum_format != "csv")
      throw std::invalid_argument("format must be text or csv");
    MorphicSystem s = resolve_system(sum_sys.name, sum_sys.file);
    SumsetQuery q{s, require_kind(sum_kind)};
    SumsetReport r = complement_upto(q, sum_max, limits);
    if (sum_oracle) {
      r.oracle_agrees = (r.complement == oracle_complement(q, sum_max, limits));
      if (!*r.oracle_agrees) exit_code = 1;
    }
    out << (sum_format == "csv" ? r.to_csv() : r.to_line() + "\n");
  });

  // ---- oracle-check ----
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "compare the scan against the brute-force oracle");
  SystemOpts oracle_sys;
  std::string oracle_kind;
  std::int64_t oracle_max = 0;
  add_system_opts(oracle_cmd, oracle_sys);
  oracle_cmd->add_option("-k,--kind", oracle_kind, "AA, AB, or BB")->required();
  oracle_cmd->add_option("-m,--max", oracle_max, "scan bound N")->required();
  oracle_cmd->fallthrough();
  oracle_cmd->callback([&] {
    MorphicSystem s = resolve_system(oracle_sys.name, oracle_sys.file);
    SumsetQuery q{s, require_kind(oracle_kind)};
    CrossCheck c = cross_check(q, oracle_max, limits);
    out << "oracle-check kind=" << kind_name(q.kind) << " N=" << oracle_max;
    if (c.ok) {
      out << " ok\n";
    } else {
      out << " FAIL first_mismatch=" << *c.first_mismatch << "\n";
      exit_code = 1;
    }
  });

  // ---- certify ----
  auto* cert_cmd = app.add_subcommand(
      "certify", "search for a finite-window complement certificate");
  SystemOpts cert_sys;
  std::string cert_kind;
  std::int64_t cert_kmax = 0;
  std::string cert_out;
  add_system_opts(cert_cmd, cert_sys);
  cert_cmd->add_option("-k,--kind", cert_kind, "AA, AB, or BB")->required();
  cert_cmd->add_option("--kmax", cert_kmax, "largest shift/window to try")
      ->required();
  cert_cmd->add_option("-o,--out", cert_out, "write the certificate here");
  cert_cmd->fallthrough();
  cert_cmd->callback([&] {
    MorphicSystem s = resolve_system(cert_sys.name, cert_sys.file);
    SumsetQuery q{s, require_kind(cert_kind)};
    SearchOutcome res = search_certificate(q, cert_kmax, limits);
    if (!res.certificate) {
      out << "not-found witness=" << coded_glyphs(res.defeating_factor)
          << " width=" << res.witness_width << "\n";
      exit_code = 1;
      return;
    }
    std::string text = format_certificate(*res.certificate);
    if (cert_out.empty()) {
      out << text;
    } else {
      std::ofstream f(cert_out);
      if (!f) throw std::invalid_argument("cannot write '" + cert_out + "'");
      f << text;
      out << "certificate written: " << cert_out << "\n";
    }
  });

  // ---- verify-cert ----
  auto* vcert_cmd = app.add_subcommand(
      "verify-cert", "re-check a certificate file from scratch");
  std::string vcert_path;
  std::string vcert_file;
  vcert_cmd->add_option("-c,--cert", vcert_path, "certificate file")
      ->required();
  vcert_cmd->add_option("-f,--file", vcert_file,
                        "system definition file, if not a built-in");
  vcert_cmd->fallthrough();
  vcert_cmd->callback([&] {
    std::ifstream in(vcert_path);
    if (!in)
      throw std::invalid_argument("cannot open certificate '" + vcert_path +
                                  "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    ShiftCertificate cert = parse_certificate(ss.str());
    MorphicSystem s = resolve_system(
        vcert_file.empty() ? cert.system_name : "", vcert_file);
    if (s.name != cert.system_name)
      throw std::invalid_argument("certificate is for system '" +
                                  cert.system_name + "', file defines '" +
                                  s.name + "'");
    SumsetQuery q{s, cert.kind};
    CertificateCheck chk = verify_certificate(q, cert, limits);
    if (chk.ok) {
      out << "PASS certificate " << cert.system_name << " "
          << kind_name(cert.kind) << " W=" << cert.window << "\n";
    } else {
      for (const auto& f : chk.failures) out << "FAIL " << f << "\n";
      exit_code = 1;
    }
  });

  // ---- verify thue-morse ----
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  auto* tm_cmd = verify_cmd->add_subcommand(
      "thue-morse", "diagonal recursions, purity, closed forms, block bands");
  std::int64_t tm_nmax = 1024;
  tm_cmd->add_option("--nmax", tm_nmax, "recursion check bound");
  tm_cmd->fallthrough();
  tm_cmd->callback([&] {
    if (tm_nmax < 8) throw std::invalid_argument("--nmax must be at least 8");
    bool all_ok = true;

    CheckReport rec = verify_recursions(tm_nmax, limits);
    if (rec.ok) {
      out << "PASS recursions n<=" << tm_nmax << "\n";
    } else {
      out << "FAIL recursions at n=" << *rec.first_failure << ": "
          << rec.detail << "\n";
      all_ok = false;
    }

    CheckReport pur = verify_purity(2 * tm_nmax, limits);
    if (pur.ok) {
      out << "PASS purity idx<=" << 2 * tm_nmax << "\n";
    } else {
      out << "FAIL purity at idx=" << *pur.first_failure << ": " << pur.detail
          << "\n";
      all_ok = false;
    }

    ClosedFormReport cf = tm_closed_form_check(tm_nmax, limits);
    if (cf.ok()) {
      out << "PASS closed-forms N=" << tm_nmax << "\n";
    } else {
      out << "FAIL closed-forms N=" << tm_nmax << ": " << cf.detail << "\n";
      all_ok = false;
    }

    CheckReport blk = verify_block_properties(4, 8, {}, limits);
    if (blk.ok) {
      out << "PASS block-properties n=4..8\n";
    } else {
      out << "FAIL block-properties: " << blk.detail << "\n";
      all_ok = false;
    }

    if (!all_ok) exit_code = 1;
  });

  // ---- render ----
  auto* render_cmd =
      app.add_subcommand("render", "write an SVG figure of a 2D block");
  SystemOpts render_sys;
  int render_n = 0;
  std::string render_letter;
  std::string render_overlay;
  std::int64_t render_overlay_count = -1;
  std::string render_target = "a";
  int render_cell = 16;
  bool render_labels = false;
  std::string render_out;
  add_system_opts(render_cmd, render_sys);
  render_cmd->add_option("-n,--iterations", render_n, "expansion level")
      ->required();
  render_cmd->add_option("--letter", render_letter,
                         "pair letter to expand; default start pair");
  render_cmd->add_option("--overlay", render_overlay,
                         "'diagonals' draws red/green anti-diagonal lines");
  render_cmd->add_option("--overlay-count", render_overlay_count,
                         "only the first N diagonals (default all)");
  render_cmd->add_option("--target", render_target,
                         "pair letter the overlay colors test for");
  render_cmd->add_option("--cell", render_cell, "cell size in pixels");
  render_cmd->add_flag("--labels", render_labels, "letter labels in cells");
  render_cmd->add_option("-o,--out", render_out, "output SVG path")
      ->required();
  render_cmd->fallthrough();
  render_cmd->callback([&] {
    MorphicSystem s = resolve_system(render_sys.name, render_sys.file);
    PairLetter p{static_cast<Letter>(s.start), static_cast<Letter>(s.start)};
    if (!render_letter.empty()) p = parse_pair_letter(render_letter, s);
    RenderSpec spec;
    spec.block = expand2d(product(s.sub), p, render_n, limits);
    spec.cell_size = render_cell;
    spec.palette = default_palette();
    spec.label_cells = render_labels;
    if (!render_overlay.empty()) {
      if (render_overlay != "diagonals")
        throw std::invalid_argument("--overlay only supports 'diagonals'");
      spec.overlays = target_overlays(
          spec.block, parse_pair_letter(render_target, s),
          render_overlay_count);
    }
    std::ofstream f(render_out);
    if (!f) throw std::invalid_argument("cannot write '" + render_out + "'");
    f << render_svg(spec);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace diagsum
