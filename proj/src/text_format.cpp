#include "expresso/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "expresso/error.hpp"

namespace expresso {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view raw;
  std::vector<Token> tokens;
};

// Splits into lines, drops comments and blank lines, tokenizes on whitespace.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const auto hash = raw.find('#');
    const std::string_view body = raw.substr(0, hash);
    Line line{number, body, {}};
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < body.size() && body[i] != ' ' && body[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({body.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
  }
  return out;
}

std::size_t to_number(const Line& line, const Token& t) {
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
  if (ec != std::errc{} || end != t.text.data() + t.text.size()) {
    throw ParseError(line.number, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  return n;
}

void expect_keyword(const Line& line, std::size_t i, std::string_view kw) {
  if (i >= line.tokens.size()) {
    throw ParseError(line.number, line.raw.size() + 1, "expected '" + std::string(kw) + "'");
  }
  if (line.tokens[i].text != kw) {
    throw ParseError(line.number, line.tokens[i].column,
                     "expected '" + std::string(kw) + "', got '" + std::string(line.tokens[i].text) + "'");
  }
}

void expect_count(const Line& line, std::size_t n) {
  if (line.tokens.size() > n) {
    throw ParseError(line.number, line.tokens[n].column, "unexpected token '" + std::string(line.tokens[n].text) + "'");
  }
  if (line.tokens.size() < n) throw ParseError(line.number, line.raw.size() + 1, "line ends early");
}

struct RawRelations {
  std::optional<std::size_t> domain;
  std::vector<NamedRelation> relations;
};

RawRelations parse_relations(std::string_view text) {
  RawRelations out;
  const auto lines = lex(text);
  std::size_t i = 0;
  if (i < lines.size() && lines[i].tokens[0].text == "domain") {
    expect_count(lines[i], 2);
    out.domain = to_number(lines[i], lines[i].tokens[1]);
    ++i;
  }
  while (i < lines.size()) {
    const Line& header = lines[i++];
    expect_keyword(header, 0, "relation");
    expect_count(header, 4);
    expect_keyword(header, 2, "arity");
    const std::string name(header.tokens[1].text);
    const std::size_t arity = to_number(header, header.tokens[3]);
    if (arity == 0) throw ParseError(header.number, header.tokens[3].column, "arity must be positive");
    std::vector<Tuple> tuples;
    while (i < lines.size() && lines[i].tokens[0].text != "relation") {
      const Line& row = lines[i++];
      if (row.tokens[0].text == "domain") {
        throw ParseError(row.number, row.tokens[0].column, "domain line must come first");
      }
      if (row.tokens.size() != arity) {
        throw ParseError(row.number, row.tokens.front().column,
                         "tuple has " + std::to_string(row.tokens.size()) + " components, relation " +
                             name + " has arity " + std::to_string(arity));
      }
      Tuple t;
      for (const auto& tok : row.tokens) {
        const std::size_t v = to_number(row, tok);
        if (v == 0 || (out.domain && v > *out.domain)) {
          throw ParseError(row.number, tok.column, "element " + std::string(tok.text) + " outside the domain");
        }
        t.push_back(static_cast<Element>(v));
      }
      tuples.push_back(std::move(t));
    }
    if (tuples.empty()) throw ParseError(header.number, header.tokens[0].column, "relation " + name + " has no tuples");
    out.relations.push_back({name, Relation(arity, std::move(tuples))});
  }
  return out;
}

void write_tuples(std::string& out, const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto t = r.tuple(i);
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(t[c]);
    }
    out += '\n';
  }
}

}  // namespace

RelationalDatabase parse_database(std::string_view text) {
  auto raw = parse_relations(text);
  if (!raw.domain) throw ParseError(1, 1, "missing 'domain n' header");
  if (raw.relations.empty()) throw ParseError(1, 1, "database has no relations");
  return RelationalDatabase(*raw.domain, std::move(raw.relations));
}

std::string write_database(const RelationalDatabase& db) {
  std::string out = "domain " + std::to_string(db.universe_size()) + "\n";
  for (const auto& nr : db.relations()) {
    out += "relation " + nr.name + " arity " + std::to_string(nr.relation.arity()) + "\n";
    write_tuples(out, nr.relation);
  }
  return out;
}

NamedRelation parse_relation(std::string_view text, std::optional<std::size_t> universe) {
  auto raw = parse_relations(text);
  if (raw.relations.size() != 1) {
    throw ParseError(1, 1, "expected exactly one relation, found " + std::to_string(raw.relations.size()));
  }
  if (raw.domain && universe && *raw.domain != *universe) {
    throw Error(ErrorCode::kUniverseMismatch, "relation file declares domain " + std::to_string(*raw.domain) +
                                                  " but the database has " + std::to_string(*universe));
  }
  return std::move(raw.relations.front());
}

std::string write_relation(const NamedRelation& r) {
  std::string out = "relation " + r.name + " arity " + std::to_string(r.relation.arity()) + "\n";
  write_tuples(out, r.relation);
  return out;
}

std::string write_group_table(const PermutationGroup& g) {
  std::string out;
  write_tuples(out, cogroup_relation(g));
  return out;
}

std::string write_group_cycles(const PermutationGroup& g) {
  std::string out;
  for (const auto& p : g.elements()) out += p.cycle_notation() + "\n";
  return out;
}

// ---------------------------------------------------------------------------

GraphDatabase parse_graph_database(std::string_view text) {
  const auto lines = lex(text);
  std::vector<std::string> schema_labels;
  std::vector<SchemaEdge> schema_edges;
  std::vector<std::string> structure_labels;
  std::vector<StructureEdge> structure_edges;
  std::vector<VertexSet> ext;
  enum class Section { kNone, kSchema, kStructure } section = Section::kNone;

  auto find = [](const std::vector<std::string>& labels, const Line& line, const Token& t) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == t.text) return i;
    }
    throw ParseError(line.number, t.column, "unknown vertex '" + std::string(t.text) + "'");
  };

  for (const auto& line : lines) {
    const auto kw = line.tokens[0].text;
    if (kw == "schema" || kw == "structure") {
      expect_count(line, 1);
      const Section next = kw == "schema" ? Section::kSchema : Section::kStructure;
      if ((next == Section::kSchema && section != Section::kNone) ||
          (next == Section::kStructure && section != Section::kSchema)) {
        throw ParseError(line.number, line.tokens[0].column, "sections must be 'schema' then 'structure'");
      }
      section = next;
      if (section == Section::kStructure) ext.assign(schema_labels.size(), 0);
      continue;
    }
    if (section == Section::kNone) {
      throw ParseError(line.number, line.tokens[0].column, "expected 'schema'");
    }
    if (section == Section::kSchema) {
      if (kw == "vertex") {
        expect_count(line, 2);
        const std::string label(line.tokens[1].text);
        for (const auto& l : schema_labels) {
          if (l == label) throw ParseError(line.number, line.tokens[1].column, "duplicate vertex '" + label + "'");
        }
        if (schema_labels.size() == kMaxGraphVertices) {
          throw ParseError(line.number, line.tokens[0].column, "more than 64 schema vertices");
        }
        schema_labels.push_back(label);
      } else if (kw == "edge") {
        expect_count(line, 4);
        schema_edges.push_back({std::string(line.tokens[1].text), find(schema_labels, line, line.tokens[2]),
                                find(schema_labels, line, line.tokens[3])});
      } else {
        throw ParseError(line.number, line.tokens[0].column, "expected 'vertex' or 'edge'");
      }
    } else {
      if (kw == "vertex") {
        expect_count(line, 4);
        expect_keyword(line, 2, "of");
        const std::string label(line.tokens[1].text);
        for (const auto& l : structure_labels) {
          if (l == label) throw ParseError(line.number, line.tokens[1].column, "duplicate vertex '" + label + "'");
        }
        if (structure_labels.size() == kMaxGraphVertices) {
          throw ParseError(line.number, line.tokens[0].column, "more than 64 structure vertices");
        }
        ext[find(schema_labels, line, line.tokens[3])] |= bit(structure_labels.size());
        structure_labels.push_back(label);
      } else if (kw == "edge") {
        expect_count(line, 4);
        const auto& c = line.tokens[3];
        if (c.text != "true" && c.text != "false") {
          throw ParseError(line.number, c.column, "color must be 'true' or 'false'");
        }
        structure_edges.push_back({find(structure_labels, line, line.tokens[1]),
                                   find(structure_labels, line, line.tokens[2]), c.text == "true"});
      } else {
        throw ParseError(line.number, line.tokens[0].column, "expected 'vertex' or 'edge'");
      }
    }
  }
  if (section != Section::kStructure) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'structure' section");
  return GraphDatabase(Schema(std::move(schema_labels), std::move(schema_edges)),
                       Structure(std::move(structure_labels), std::move(structure_edges)), std::move(ext));
}

std::string write_graph_database(const GraphDatabase& db) {
  std::string out = "schema\n";
  const auto& schema = db.schema();
  for (const auto& l : schema.labels()) out += "vertex " + l + "\n";
  for (const auto& e : schema.edges()) {
    out += "edge " + e.label + " " + schema.label(e.from) + " " + schema.label(e.to) + "\n";
  }
  out += "structure\n";
  const auto& s = db.structure();
  for (std::size_t y = 0; y < s.vertex_count(); ++y) {
    out += "vertex " + s.label(y) + " of " + schema.label(db.name_of(y)) + "\n";
  }
  for (const auto& e : s.edges()) {
    out += "edge " + s.label(e.from) + " " + s.label(e.to) + (e.color ? " true\n" : " false\n");
  }
  return out;
}

std::vector<Instance> parse_instances(std::string_view text, const GraphDatabase& db) {
  const auto lines = lex(text);
  std::vector<Instance> out;
  std::vector<VertexSet> current;
  bool open = false;
  std::size_t opened_at = 1;
  auto close = [&]() {
    if (!open) return;
    try {
      out.push_back(make_instance(db, current));
    } catch (const Error& e) {
      throw ParseError(opened_at, 1, std::string("invalid instance: ") + e.what());
    }
    open = false;
  };
  auto start = [&](std::size_t at) {
    current.assign(db.schema().vertex_count(), 0);
    open = true;
    opened_at = at;
  };

  for (const auto& line : lines) {
    if (line.tokens[0].text == "instance") {
      expect_count(line, 1);
      close();
      start(line.number);
      continue;
    }
    if (!open) start(line.number);
    // "name: {v1,v2}" with free spacing inside the braces.
    const std::string_view body = line.raw;
    const auto colon = body.find(':');
    const std::size_t first = line.tokens[0].column - 1;
    if (colon == std::string_view::npos) throw ParseError(line.number, first + 1, "expected 'name: {...}'");
    std::string_view name = body.substr(first, colon - first);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
    const auto x = db.schema().find(std::string(name));
    if (!x) throw ParseError(line.number, first + 1, "unknown schema vertex '" + std::string(name) + "'");
    if (current[*x] != 0) throw ParseError(line.number, first + 1, "name '" + std::string(name) + "' given twice");
    const auto lb = body.find('{', colon);
    const auto rb = body.find('}', colon);
    if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb) {
      throw ParseError(line.number, colon + 2, "expected '{v1,v2,...}'");
    }
    for (std::size_t c = rb + 1; c < body.size(); ++c) {
      if (body[c] != ' ' && body[c] != '\t') throw ParseError(line.number, c + 1, "trailing characters");
    }
    std::size_t pos = lb + 1;
    while (pos < rb) {
      std::size_t end = body.find(',', pos);
      if (end == std::string_view::npos || end > rb) end = rb;
      std::string_view item = body.substr(pos, end - pos);
      std::size_t col = pos + 1;
      while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
        item.remove_prefix(1);
        ++col;
      }
      while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
      if (item.empty()) throw ParseError(line.number, col, "empty element");
      const auto y = db.structure().find(std::string(item));
      if (!y) throw ParseError(line.number, col, "unknown structure vertex '" + std::string(item) + "'");
      current[*x] |= bit(*y);
      pos = end + 1;
    }
    if (current[*x] == 0) throw ParseError(line.number, lb + 1, "empty image");
  }
  close();
  if (out.empty()) throw ParseError(1, 1, "no instances");
  return out;
}

std::string write_instances(const GraphDatabase& db, const std::vector<Instance>& instances) {
  std::string out;
  for (const auto& f : instances) out += "instance\n" + to_string(db, f);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace expresso
