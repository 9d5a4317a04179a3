#include "paqa/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace paqa {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  SourcePos pos;
};

bool name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line, std::size_t offset = 0)
      : text_(text), line_(line), i_(offset) {}

  void skip_space() {
    while (i_ < text_.size() && is_space(text_[i_])) ++i_;
  }
  bool at_end() {
    skip_space();
    return i_ >= text_.size();
  }
  SourcePos pos() const { return {line_, i_ + 1}; }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(i_, s.size()) != s) return false;
    i_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  Token name(const char* what) {
    skip_space();
    Token t{"", pos()};
    while (i_ < text_.size() && name_char(static_cast<unsigned char>(text_[i_]))) t.text += text_[i_++];
    if (t.text.empty()) fail(std::string("expected ") + what);
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos(), msg); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t i_;
};

struct WordItem {
  std::vector<std::string> word;
  SourcePos pos;
};

std::vector<WordItem> parse_words(LineCursor& cur) {
  std::vector<WordItem> out;
  do {
    WordItem item;
    item.pos = (cur.skip_space(), cur.pos());
    item.word.push_back(cur.name("arrow name").text);
    while (cur.accept("*")) item.word.push_back(cur.name("arrow name").text);
    out.push_back(std::move(item));
  } while (cur.accept(","));
  if (!cur.at_end()) cur.fail("unexpected text");
  return out;
}

struct ArrowItem {
  ArrowDecl decl;
  SourcePos pos, origin_pos, target_pos;
};

struct Generator {
  enum Kind { zero, comm, anti } kind;
  WordItem item;
};

}  // namespace

SpecDocument parse_spec(std::string_view text) {
  std::vector<Token> vertices;
  std::vector<ArrowItem> arrows;
  std::vector<Generator> generators;
  std::optional<std::pair<Flavor, SourcePos>> declared;
  std::optional<std::pair<unsigned, SourcePos>> field_char;
  std::optional<KoszulBasis> koszul;
  std::set<std::string> seen_once;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor cur(line, line_no);
    if (cur.at_end()) continue;
    SourcePos key_pos = cur.pos();
    Token key = cur.name("a directive");
    auto once = [&](const std::string& k) {
      if (!seen_once.insert(k).second) throw ParseError(key_pos, "duplicate '" + k + "' directive");
    };

    if (key.text == "ideal") {
      once("ideal");
      Token f = cur.name("'commutative' or 'anticommutative'");
      if (f.text == "commutative") declared = {{Flavor::commutative, f.pos}};
      else if (f.text == "anticommutative") declared = {{Flavor::anticommutative, f.pos}};
      else throw ParseError(f.pos, "unknown ideal flavor '" + f.text + "'");
      if (!cur.at_end()) cur.fail("unexpected text");
      continue;
    }
    cur.expect(":");
    if (key.text == "vertices") {
      do vertices.push_back(cur.name("vertex name"));
      while (cur.accept(","));
      if (!cur.at_end()) cur.fail("unexpected text");
    } else if (key.text == "arrows") {
      do {
        ArrowItem a;
        Token n = cur.name("arrow name");
        a.pos = n.pos;
        cur.expect(":");
        Token o = cur.name("origin vertex");
        cur.expect("->");
        Token t = cur.name("target vertex");
        a.decl = {n.text, o.text, t.text};
        a.origin_pos = o.pos;
        a.target_pos = t.pos;
        arrows.push_back(std::move(a));
      } while (cur.accept(","));
      if (!cur.at_end()) cur.fail("unexpected text");
    } else if (key.text == "zero" || key.text == "comm" || key.text == "anti") {
      Generator::Kind kind = key.text == "zero"   ? Generator::zero
                             : key.text == "comm" ? Generator::comm
                                                  : Generator::anti;
      for (auto& w : parse_words(cur)) generators.push_back({kind, std::move(w)});
    } else if (key.text == "char") {
      once("char");
      Token v = cur.name("a characteristic");
      unsigned p = 0;
      auto [ptr, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), p);
      if (ec != std::errc() || ptr != v.text.data() + v.text.size())
        throw ParseError(v.pos, "characteristic must be a non-negative integer");
      field_char = {{p, v.pos}};
      if (!cur.at_end()) cur.fail("unexpected text");
    } else if (key.text == "koszul") {
      once("koszul");
      Token v = cur.name("'asserted' or 'unknown'");
      if (v.text == "asserted") koszul = KoszulBasis::asserted;
      else if (v.text == "unknown") koszul = KoszulBasis::unknown;
      else throw ParseError(v.pos, "unknown koszul value '" + v.text + "'");
      if (!cur.at_end()) cur.fail("unexpected text");
    } else {
      throw ParseError(key_pos, "unknown directive '" + key.text + "'");
    }
  }

  // Quiver checks with positions.
  std::set<std::string> names;
  std::vector<std::string> vertex_names;
  for (const auto& v : vertices) {
    if (!names.insert(v.text).second) throw ParseError(v.pos, "duplicate vertex name '" + v.text + "'");
    vertex_names.push_back(v.text);
  }
  std::set<std::string> vertex_set(vertex_names.begin(), vertex_names.end());
  std::vector<ArrowDecl> decls;
  for (const auto& a : arrows) {
    if (!names.insert(a.decl.name).second)
      throw ParseError(a.pos, "duplicate name '" + a.decl.name + "'");
    if (!vertex_set.count(a.decl.origin))
      throw ParseError(a.origin_pos, "undeclared vertex '" + a.decl.origin + "'");
    if (!vertex_set.count(a.decl.target))
      throw ParseError(a.target_pos, "undeclared vertex '" + a.decl.target + "'");
    decls.push_back(a.decl);
  }
  if (vertex_names.empty()) throw ParseError({line_no, 1}, "no vertices declared");
  Quiver q = Quiver::build(vertex_names, decls);

  auto raw_for = [&](std::size_t count) {
    RawGenerators raw;
    if (declared) raw.declared_flavor = declared->first;
    raw.field_char = field_char ? field_char->first : 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& g = generators[i];
      if (g.kind == Generator::zero) raw.zero_words.push_back(g.item.word);
      else raw.relations.push_back({g.item.word, g.kind == Generator::comm ? Flavor::commutative
                                                                            : Flavor::anticommutative});
    }
    return raw;
  };

  SpecDocument doc;
  doc.source = std::string(text);
  try {
    doc.presentation.ideal = validate_ideal(q, raw_for(generators.size()));
  } catch (const IdealError& e) {
    if (field_char) {
      try {
        RawGenerators probe;
        probe.field_char = field_char->first;
        validate_ideal(q, probe);
      } catch (const IdealError& ce) {
        throw ParseError(field_char->second, ce.what());
      }
    }
    for (std::size_t n = 1; n <= generators.size(); ++n) {
      try {
        validate_ideal(q, raw_for(n));
      } catch (const IdealError& ge) {
        throw ParseError(generators[n - 1].item.pos, ge.what());
      }
    }
    throw ParseError({1, 1}, e.what());
  }
  doc.presentation.koszul = koszul.value_or(KoszulBasis::unknown);
  if (!q.is_connected())
    doc.warnings.push_back("quiver is disconnected; degree-0 center reported per component");
  return doc;
}

std::string print(const AlgebraPresentation& pres) {
  const auto& spec = pres.ideal;
  const auto& q = spec.quiver();
  std::string out = "vertices: ";
  for (std::size_t i = 0; i < q.vertex_count(); ++i) out += (i ? ", " : "") + q.vertex_name(i);
  out += "\n";
  if (q.arrow_count()) {
    out += "arrows: ";
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrow(a);
      out += (a ? ", " : "") + arrow.name + ": " + q.vertex_name(arrow.origin) + "->" +
             q.vertex_name(arrow.target);
    }
    out += "\n";
  }
  out += "ideal " + to_string(spec.flavor()) + "\n";
  auto pair_list = [&](const std::set<ArrowPair>& pairs) {
    std::string s;
    for (const auto& p : pairs)
      s += (s.empty() ? "" : ", ") + q.arrow_name(p.first) + "*" + q.arrow_name(p.second);
    return s;
  };
  if (!spec.monomials().empty()) out += "zero: " + pair_list(spec.monomials()) + "\n";
  if (!spec.relations().empty())
    out += std::string(spec.flavor() == Flavor::commutative ? "comm: " : "anti: ") +
           pair_list(spec.relations()) + "\n";
  if (spec.field_char()) out += "char: " + std::to_string(spec.field_char()) + "\n";
  if (pres.koszul == KoszulBasis::asserted) out += "koszul: asserted\n";
  return out;
}

}  // namespace paqa
