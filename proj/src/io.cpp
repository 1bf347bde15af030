#include <q4d/io.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace q4d {

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        (col > 0 ? ", col " + std::to_string(col) : "") +
                                        ": " + msg
                                  : msg),
      line(line),
      col(col) {}

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment stripped, trimmed
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int n = 0;
  while (std::getline(is, raw)) {
    ++n;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    out.push_back({n, raw.substr(a, b - a + 1)});
  }
  return out;
}

struct Token {
  std::string text;
  int col = 0;  // 1-based within the stripped line
};

std::vector<Token> tokens_of(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), int(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const std::string& s, const Line& ln, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'", ln.number);
  }
}

BraidWord parse_braid_impl(const std::string& body, int strands, const Line& ln) {
  std::vector<std::pair<int, int>> letters;
  for (const Token& t : tokens_of(body)) {
    std::string s = t.text;
    int sign = 1;
    if (!s.empty() && s.back() == '\'') {
      sign = -1;
      s.pop_back();
    }
    if (s.size() < 2 || s[0] != 's')
      throw ParseError("expected braid letter like s2 or s2', got '" + t.text + "'",
                       ln.number, t.col);
    int idx = parse_int(s.substr(1), ln, "braid letter index");
    if (idx < 1 || idx > strands - 1)
      throw ParseError("braid letter s" + std::to_string(idx) + " out of range 1.." +
                           std::to_string(strands - 1),
                       ln.number, t.col);
    letters.push_back({idx, sign});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord parse_plat_line(const std::string& body, int bridges, const Line& ln) {
  return parse_braid_impl(body, 2 * bridges, ln);
}

std::vector<Word> parse_relator_line(const std::string& body, int bridges, const Line& ln) {
  std::vector<Word> rels;
  Word cur;
  bool any = false;
  for (const Token& t : tokens_of(body)) {
    if (t.text == ";") {
      if (cur.empty())
        throw ParseError("empty relator before ';'", ln.number, t.col);
      rels.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    any = true;
    std::string s = t.text;
    int sign = 1;
    size_t caret = s.find('^');
    if (caret != std::string::npos) {
      std::string e = s.substr(caret + 1);
      if (e == "-1")
        sign = -1;
      else if (e != "1")
        throw ParseError("only exponents 1 and -1 are allowed, got '" + t.text + "'",
                         ln.number, t.col);
      s.erase(caret);
    }
    if (s.size() < 2 || s[0] != 'x')
      throw ParseError("expected generator like x4 or x4^-1, got '" + t.text + "'",
                       ln.number, t.col);
    int idx = parse_int(s.substr(1), ln, "generator index");
    if (idx < 0 || idx > 2 * bridges - 1)
      throw ParseError("generator x" + std::to_string(idx) + " out of range 0.." +
                           std::to_string(2 * bridges - 1),
                       ln.number, t.col);
    cur.push_back({idx, sign});
  }
  if (!cur.empty()) rels.push_back(std::move(cur));
  if (!any) throw ParseError("relator-mode tangle needs at least one relator", ln.number);
  return rels;
}

}  // namespace

FourPlaneDiagram parse_diagram(const std::string& text) {
  std::string mode, label;
  int bridges = -1;
  std::array<const Line*, 4> tangle_lines{};
  std::array<std::string, 4> tangle_bodies;
  std::vector<Line> lines = content_lines(text);

  for (const Line& ln : lines) {
    size_t colon = ln.text.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", ln.number);
    std::string key = ln.text.substr(0, colon);
    std::string value = ln.text.substr(colon + 1);
    size_t a = value.find_first_not_of(" \t");
    value = a == std::string::npos ? "" : value.substr(a);

    if (key == "mode") {
      if (value != "plat" && value != "relators")
        throw ParseError("mode must be 'plat' or 'relators'", ln.number);
      mode = value;
    } else if (key == "bridges") {
      bridges = parse_int(value, ln, "bridges");
      if (bridges < 1) throw ParseError("bridges must be >= 1", ln.number);
    } else if (key == "label") {
      label = value;
    } else if (key.size() == 7 && key.compare(0, 6, "tangle") == 0 && key[6] >= '1' &&
               key[6] <= '4') {
      int idx = key[6] - '1';
      if (tangle_lines[idx]) throw ParseError("duplicate " + key, ln.number);
      tangle_lines[idx] = &ln;
      tangle_bodies[idx] = value;
    } else {
      throw ParseError("unknown key '" + key + "'", ln.number);
    }
  }

  if (mode.empty()) throw ParseError("missing 'mode:' line");
  if (bridges < 0) throw ParseError("missing 'bridges:' line");
  for (int i = 0; i < 4; ++i)
    if (!tangle_lines[i])
      throw ParseError("missing 'tangle" + std::to_string(i + 1) + ":' line");

  FourPlaneDiagram d;
  d.bridges = bridges;
  d.label = label;
  for (int i = 0; i < 4; ++i) {
    const Line& ln = *tangle_lines[i];
    try {
      if (mode == "plat")
        d.tangles[i] = TrivialTangle(bridges, parse_plat_line(tangle_bodies[i], bridges, ln));
      else
        d.tangles[i] =
            RelatorTangle(bridges, parse_relator_line(tangle_bodies[i], bridges, ln));
      tangle_group(d.tangles[i]);  // relator mode: enforces abelianization Z^b
      tangle_matching(d.tangles[i]);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("tangle") + std::to_string(i + 1) + ": " + e.what(),
                       ln.number);
    }
  }
  check_structure(d);
  return d;
}

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 2) throw ParseError("braid needs at least 2 strands");
  return parse_braid_impl(text, strands, Line{0, text});
}

std::string serialize_diagram(const FourPlaneDiagram& d) {
  check_structure(d);
  bool all_plat = true;
  for (const Tangle& t : d.tangles) all_plat &= std::holds_alternative<TrivialTangle>(t);

  std::ostringstream os;
  os << "mode: " << (all_plat ? "plat" : "relators") << "\n";
  os << "bridges: " << d.bridges << "\n";
  if (!d.label.empty()) os << "label: " << d.label << "\n";
  for (int i = 0; i < 4; ++i) {
    os << "tangle" << i + 1 << ":";
    if (all_plat) {
      for (auto [idx, sign] : std::get<TrivialTangle>(d.tangles[i]).braid.letters)
        os << " s" << idx << (sign < 0 ? "'" : "");
    } else {
      bool first = true;
      for (const Word& r : tangle_relators(d.tangles[i])) {
        if (!first) os << " ;";
        first = false;
        for (const Letter& l : r) os << " x" << l.gen << (l.sign < 0 ? "^-1" : "");
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

Permutation parse_cycles(const std::string& body, int sheets, const Line& ln) {
  std::vector<int> img(sheets);
  for (int i = 0; i < sheets; ++i) img[i] = i;
  if (body == "id" || body == "()") return Permutation(img);

  std::vector<bool> used(sheets, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() &&
           (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
      ++i;
  };
  skip_ws();
  bool any = false;
  while (i < body.size()) {
    if (body[i] != '(')
      throw ParseError("expected '(' in cycle notation", ln.number, int(i) + 1);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < body.size() && body[i] != ')') {
      size_t j = i;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      if (j == i)
        throw ParseError("expected a sheet number in cycle", ln.number, int(i) + 1);
      int v = parse_int(body.substr(i, j - i), ln, "sheet number");
      if (v < 1 || v > sheets)
        throw ParseError("sheet " + std::to_string(v) + " out of range 1.." +
                             std::to_string(sheets),
                         ln.number, int(i) + 1);
      if (used[v - 1])
        throw ParseError("sheet " + std::to_string(v) + " appears twice", ln.number,
                         int(i) + 1);
      used[v - 1] = true;
      cyc.push_back(v - 1);
      i = j;
      skip_ws();
    }
    if (i >= body.size()) throw ParseError("unterminated cycle", ln.number);
    ++i;  // ')'
    skip_ws();
    any = true;
    for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any) throw ParseError("expected cycles, '()' or 'id'", ln.number);
  return Permutation(img);
}

}  // namespace

PermutationRep parse_rho(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 'sheets:' line");
  const Line& head = lines[0];
  size_t colon = head.text.find(':');
  if (colon == std::string::npos || head.text.substr(0, colon) != "sheets")
    throw ParseError("first line must be 'sheets: n'", head.number);
  std::string value = head.text.substr(colon + 1);
  size_t a = value.find_first_not_of(" \t");
  value = a == std::string::npos ? "" : value.substr(a);
  int sheets = parse_int(value, head, "sheets");
  if (sheets < 1) throw ParseError("sheets must be >= 1", head.number);

  std::vector<Permutation> images;
  for (size_t k = 1; k < lines.size(); ++k)
    images.push_back(parse_cycles(lines[k].text, sheets, lines[k]));
  if (images.empty() || images.size() % 2 != 0)
    throw ParseError("need an even, positive number of permutation lines (one per puncture)");

  PermutationRep rho(sheets, std::move(images));
  if (!rho.sphere_ok)
    throw ParseError("product of the permutations is not the identity "
                     "(sphere relator violated)");
  return rho;
}

std::string serialize_rho(const PermutationRep& rho) {
  std::ostringstream os;
  os << "sheets: " << rho.sheets << "\n";
  for (const Permutation& p : rho.images) {
    bool any = false;
    for (const std::vector<int>& cyc : p.cycles()) {
      if (cyc.size() < 2) continue;
      any = true;
      os << "(";
      for (size_t k = 0; k < cyc.size(); ++k) os << (k ? " " : "") << cyc[k] + 1;
      os << ")";
    }
    if (!any) os << "()";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

FourPlaneDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

PermutationRep load_rho(const std::string& path) { return parse_rho(read_file(path)); }

}  // namespace q4d
