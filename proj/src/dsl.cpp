#include "diagsum/dsl.hpp"

#include <map>
#include <sstream>

namespace diagsum {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

Letter require_glyph(const std::string& tok, Alphabet& alphabet, bool may_add,
                     int line) {
  if (tok.size() != 1) {
    throw ParseError(line, "expected a single-character glyph, got '" + tok + "'");
  }
  if (auto a = alphabet.find(tok[0])) return *a;
  if (!may_add) {
    throw ParseError(line, std::string("unknown glyph '") + tok[0] + "'");
  }
  alphabet.glyphs.push_back(tok[0]);
  return static_cast<Letter>(alphabet.glyphs.size() - 1);
}

MorphicSystem make(const std::string& name, const std::string& glyphs,
                   const std::vector<std::string>& rule_text,
                   const std::string& coding, char start, int index_base) {
  MorphicSystem s;
  s.name = name;
  s.sub.alphabet = Alphabet{glyphs};
  for (const auto& r : rule_text) s.sub.rules.push_back(s.sub.alphabet.parse(r));
  for (char c : coding) s.coding.push_back(static_cast<char>(c - '0'));
  s.start = *s.sub.alphabet.find(start);
  s.index_base = index_base;
  check_system(s);
  return s;
}

}  // namespace

std::optional<MorphicSystem> builtin_system(std::string_view name) {
  if (name == "fibonacci") {
    return make("fibonacci", "01", {"01", "0"}, "01", '0', 1);
  }
  if (name == "thue_morse") {
    return make("thue_morse", "01", {"01", "10"}, "01", '0', 0);
  }
  if (name == "von_neumann") {
    return make("von_neumann", "01", {"0", "110"}, "01", '1', 1);
  }
  if (name == "squares") {
    return make("squares", "012", {"01", "221", "2"}, "010", '0', 0);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"fibonacci", "thue_morse", "von_neumann", "squares"};
}

MorphicSystem parse_system(const std::string& text) {
  std::string name;
  bool saw_system = false;
  bool saw_alphabet = false;
  Alphabet alphabet;
  std::map<Letter, Word> rules;
  std::map<Letter, Letter> codes;
  std::optional<char> start_glyph;
  int start_line = 0;
  std::optional<int> index_base;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "system") {
      if (toks.size() != 2) throw ParseError(line_no, "usage: system <name>");
      if (saw_system) throw ParseError(line_no, "duplicate system line");
      saw_system = true;
      name = toks[1];
    } else if (head == "alphabet") {
      if (saw_alphabet) throw ParseError(line_no, "duplicate alphabet line");
      if (!rules.empty()) {
        throw ParseError(line_no, "alphabet must precede rules");
      }
      if (toks.size() < 2) throw ParseError(line_no, "empty alphabet");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) {
          throw ParseError(line_no, "glyphs must be single characters");
        }
        if (alphabet.find(toks[i][0])) {
          throw ParseError(line_no, "duplicate glyph '" + toks[i] + "'");
        }
        alphabet.glyphs.push_back(toks[i][0]);
      }
      saw_alphabet = true;
    } else if (head == "rule") {
      if (toks.size() < 3 || toks[2] != "->") {
        throw ParseError(line_no, "usage: rule <g> -> <g> <g> ...");
      }
      Letter lhs = require_glyph(toks[1], alphabet, !saw_alphabet, line_no);
      if (rules.count(lhs)) {
        throw ParseError(line_no, "duplicate rule for '" + toks[1] + "'");
      }
      if (toks.size() == 3) {
        throw ParseError(line_no,
                         "erasing rule for '" + toks[1] + "' (empty image)");
      }
      Word image;
      for (std::size_t i = 3; i < toks.size(); ++i) {
        image.push_back(static_cast<char>(
            require_glyph(toks[i], alphabet, !saw_alphabet, line_no)));
      }
      rules[lhs] = image;
    } else if (head == "code") {
      if (toks.size() != 4 || toks[2] != "->") {
        throw ParseError(line_no, "usage: code <g> -> <0|1>");
      }
      Letter lhs = require_glyph(toks[1], alphabet, false, line_no);
      if (toks[3] != "0" && toks[3] != "1") {
        throw ParseError(line_no, "coding values must be 0 or 1");
      }
      codes[lhs] = static_cast<Letter>(toks[3][0] - '0');
    } else if (head == "start") {
      if (toks.size() != 2 || toks[1].size() != 1) {
        throw ParseError(line_no, "usage: start <g>");
      }
      start_glyph = toks[1][0];
      start_line = line_no;
    } else if (head == "index_base") {
      if (toks.size() != 2 || (toks[1] != "0" && toks[1] != "1")) {
        throw ParseError(line_no, "usage: index_base <0|1>");
      }
      index_base = toks[1][0] - '0';
    } else {
      throw ParseError(line_no, "unknown directive '" + head + "'");
    }
  }

  if (!saw_system) throw ParseError(0, "missing 'system <name>' line");

  // A bare built-in reference resolves to the built-in definition.
  if (rules.empty() && !saw_alphabet && !start_glyph && !index_base) {
    if (auto b = builtin_system(name)) return *b;
    throw ParseError(0, "system '" + name + "' has no rules and is not built in");
  }

  MorphicSystem s;
  s.name = name;
  s.sub.alphabet = alphabet;
  s.sub.rules.resize(alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    auto it = rules.find(static_cast<Letter>(a));
    if (it == rules.end()) {
      throw ParseError(0, std::string("missing rule for letter '") +
                              alphabet.glyphs[a] + "'");
    }
    s.sub.rules[a] = it->second;
  }

  if (codes.empty()) {
    if (alphabet.size() > 2) {
      throw ParseError(0,
                       "alphabets with more than two letters need explicit "
                       "code lines");
    }
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      s.coding.push_back(static_cast<char>(a));
    }
  } else {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      auto it = codes.find(static_cast<Letter>(a));
      if (it == codes.end()) {
        throw ParseError(0, std::string("coding missing for letter '") +
                                alphabet.glyphs[a] + "'");
      }
      s.coding.push_back(static_cast<char>(it->second));
    }
  }

  if (!start_glyph) throw ParseError(0, "missing 'start <g>' line");
  auto st = alphabet.find(*start_glyph);
  if (!st) {
    throw ParseError(start_line, std::string("start glyph '") + *start_glyph +
                                     "' not in alphabet");
  }
  s.start = *st;
  s.index_base = index_base.value_or(0);

  try {
    check_system(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return s;
}

std::string emit_system(const MorphicSystem& s) {
  std::ostringstream out;
  out << "system " << s.name << "\n";
  out << "alphabet";
  for (char g : s.sub.alphabet.glyphs) out << ' ' << g;
  out << "\n";
  for (std::size_t a = 0; a < s.sub.rules.size(); ++a) {
    out << "rule " << s.sub.alphabet.glyphs[a] << " ->";
    for (unsigned char b : s.sub.rules[a]) {
      out << ' ' << s.sub.alphabet.glyph(static_cast<Letter>(b));
    }
    out << "\n";
  }
  if (!s.identity_coded() || s.sub.alphabet.size() > 2) {
    for (std::size_t a = 0; a < s.coding.size(); ++a) {
      out << "code " << s.sub.alphabet.glyphs[a] << " -> "
          << int(s.coding[a]) << "\n";
    }
  }
  out << "start " << s.sub.alphabet.glyphs[s.start] << "\n";
  out << "index_base " << s.index_base << "\n";
  return out.str();
}

}  // namespace diagsum
