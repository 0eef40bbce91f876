#include "singlat/dsl.hpp"

#include "singlat/errors.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <regex>
#include <set>

namespace singlat {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Columns count code points, not bytes.
std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t column = 0;
  std::size_t i = 0;
  auto advance = [&] {
    if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++column;
    ++i;
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (is_space(c)) {
      advance();
      continue;
    }
    if (c == '=' || c == ':') {
      advance();
      out.push_back({std::string(1, c), column});
      continue;
    }
    if (static_cast<unsigned char>(c) < 0x20) throw InputError("control character", lineno, column + 1);
    Token t{{}, column + 1};
    while (i < line.size() && !is_space(line[i]) && line[i] != '=' && line[i] != ':' && line[i] != '#') {
      t.text += line[i];
      advance();
    }
    out.push_back(std::move(t));
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t lineno, std::size_t end_column)
      : tokens_(std::move(tokens)), line_(lineno), end_(end_column) {}

  bool done() const { return pos_ == tokens_.size(); }
  const Token& peek() const { return tokens_.at(pos_); }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what, line_, done() ? end_ : peek().column);
  }

  Token word(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    if (peek().text == "=" || peek().text == ":") fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    return tokens_[pos_++];
  }

  void expect(const char* symbol) {
    if (done() || peek().text != symbol) fail(std::string("expected '") + symbol + "'");
    ++pos_;
  }

  void finish() {
    if (!done()) fail("unexpected '" + peek().text + "'");
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t end_;
};

const std::regex integer_re("[+-]?[0-9]+");
const std::regex rational_re("([+-]?[0-9]+)(/([0-9]+))?");
const std::regex id_re("[A-Za-z0-9_.'+-]+|[^\\x00-\\x7F][^=:#\\s]*");

std::int64_t parse_int64(const Token& t, std::size_t line) {
  if (!std::regex_match(t.text, integer_re)) throw InputError("expected an integer, found '" + t.text + "'", line, t.column);
  std::int64_t v = 0;
  const char* first = t.text.data() + (t.text[0] == '+' ? 1 : 0);
  const auto [ptr, ec] = std::from_chars(first, t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw InputError("integer '" + t.text + "' out of range", line, t.column);
  return v;
}

Rational parse_rational(const Token& t, std::size_t line, bool integral) {
  std::smatch m;
  if (!std::regex_match(t.text, m, rational_re) || (integral && m[2].matched))
    throw InputError(std::string("expected ") + (integral ? "an integer" : "a rational p/q") + ", found '" + t.text + "'",
                     line, t.column);
  std::string num = m[1].str();
  if (num[0] == '+') num.erase(0, 1);
  const Integer p(num);
  const Integer q = m[2].matched ? Integer(m[3].str()) : Integer(1);
  if (q == 0) throw InputError("zero denominator in '" + t.text + "'", line, t.column);
  return Rational(p, q);
}

std::string check_id(const Token& t, std::size_t line) {
  if (!std::regex_match(t.text, id_re)) throw InputError("invalid identifier '" + t.text + "'", line, t.column);
  return t.text;
}

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (char c : s)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

GraphDocument parse(std::string_view text) {
  GraphDocument doc;
  bool named = false;
  std::set<std::string> ids, cycle_names;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view raw = text.substr(start, stop - start);
    start = stop + 1;
    ++lineno;

    LineParser p(tokenize(raw, lineno), lineno, code_points(raw) + 1);
    if (p.done()) continue;
    const Token kw = p.word("a statement");

    if (kw.text == "graph") {
      if (named) throw InputError("duplicate 'graph' statement", lineno, kw.column);
      doc.name = check_id(p.word("a graph name"), lineno);
      p.finish();
      named = true;
    } else if (kw.text == "vertex") {
      const Token id = p.word("a vertex id");
      Vertex v{check_id(id, lineno), 0, 0};
      if (ids.count(v.id)) throw InputError("duplicate vertex id '" + v.id + "'", lineno, id.column);
      bool has_euler = false, has_genus = false;
      while (!p.done()) {
        const Token key = p.word("'euler' or 'genus'");
        p.expect("=");
        const Token value = p.word("a value");
        if (key.text == "euler" && !has_euler) {
          v.euler = parse_int64(value, lineno);
          has_euler = true;
        } else if (key.text == "genus" && !has_genus) {
          v.genus = parse_int64(value, lineno);
          if (v.genus < 0) throw InputError("genus must be nonnegative", lineno, value.column);
          has_genus = true;
        } else {
          throw InputError("unexpected attribute '" + key.text + "'", lineno, key.column);
        }
      }
      if (!has_euler) p.fail("vertex '" + v.id + "' needs euler=<int>");
      ids.insert(v.id);
      doc.vertices.push_back(std::move(v));
    } else if (kw.text == "edge") {
      const Token a = p.word("a vertex id");
      const Token b = p.word("a vertex id");
      p.finish();
      for (const auto* t : {&a, &b})
        if (!ids.count(t->text)) throw InputError("unknown vertex '" + t->text + "' in edge", lineno, t->column);
      if (a.text == b.text) throw InputError("loop edge at '" + a.text + "'", lineno, b.column);
      doc.edges.emplace_back(a.text, b.text);
    } else if (kw.text == "cycle") {
      const Token name = p.word("a cycle name");
      CycleDefinition c{check_id(name, lineno), CycleBasis::E, {}};
      if (cycle_names.count(c.name)) throw InputError("duplicate cycle '" + c.name + "'", lineno, name.column);
      const Token basis = p.word("'E' or 'Edual'");
      if (basis.text == "E") c.basis = CycleBasis::E;
      else if (basis.text == "Edual") c.basis = CycleBasis::Edual;
      else throw InputError("expected 'E' or 'Edual', found '" + basis.text + "'", lineno, basis.column);
      p.expect(":");
      std::set<std::string> seen;
      while (!p.done()) {
        const Token id = p.word("a vertex id");
        if (!ids.count(id.text)) throw InputError("unknown vertex '" + id.text + "' in cycle", lineno, id.column);
        if (!seen.insert(id.text).second)
          throw InputError("vertex '" + id.text + "' repeated in cycle", lineno, id.column);
        p.expect("=");
        const Token value = p.word("a coefficient");
        c.coefficients.emplace_back(id.text, parse_rational(value, lineno, c.basis == CycleBasis::Edual));
      }
      cycle_names.insert(c.name);
      doc.cycles.push_back(std::move(c));
    } else {
      throw InputError("unknown statement '" + kw.text + "'", lineno, kw.column);
    }
  }

  if (doc.vertices.empty()) throw InputError("graph has no vertices", 1, 1);
  to_graph(doc);
  return doc;
}

std::string serialize(const GraphDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "graph " + doc.name + "\n";
  for (const auto& v : doc.vertices) {
    out += "vertex " + v.id + " euler=" + std::to_string(v.euler);
    if (v.genus != 0) out += " genus=" + std::to_string(v.genus);
    out += "\n";
  }
  for (const auto& [a, b] : doc.edges) out += "edge " + a + " " + b + "\n";
  for (const auto& c : doc.cycles) {
    out += "cycle " + c.name + (c.basis == CycleBasis::E ? " E:" : " Edual:");
    for (const auto& [id, q] : c.coefficients) out += " " + id + "=" + to_string(q);
    out += "\n";
  }
  return out;
}

ResolutionGraph to_graph(const GraphDocument& doc) { return ResolutionGraph::from_ids(doc.vertices, doc.edges); }

GraphDocument to_document(const ResolutionGraph& g, std::string name) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.vertices = g.vertices();
  for (const auto& e : g.edges()) doc.edges.emplace_back(g.vertex(e.first).id, g.vertex(e.second).id);
  return doc;
}

Cycle cycle_value(const GraphDocument& doc, const Lattice& lat, std::string_view name) {
  for (const auto& c : doc.cycles) {
    if (c.name != name) continue;
    Cycle out = zero_cycle(lat.rank());
    for (const auto& [id, q] : c.coefficients) {
      const auto v = static_cast<Eigen::Index>(lat.graph().index_of(id));
      if (c.basis == CycleBasis::E) out(v) += q;
      else out += q * lat.dual_basis().col(v);
    }
    return out;
  }
  throw DomainError("no cycle named '" + std::string(name) + "'");
}

}  // namespace singlat
