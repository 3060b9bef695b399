#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expresso/graph.hpp"
#include "expresso/permutation.hpp"
#include "expresso/relation.hpp"

namespace expresso {

// Relational database files:
//
//   domain 4
//   relation R1 arity 2
//   1 2
//   2 1
//
// Blank lines and '#' comments are ignored. Errors, including elements
// outside 1..n, raise ParseError with the offending line and column; the
// remaining database checks (an element of U used nowhere) raise their own codes.
RelationalDatabase parse_database(std::string_view text);
std::string write_database(const RelationalDatabase& db);

// A file holding exactly one relation. The domain line is optional; when
// present and `universe` is given, the two must agree.
NamedRelation parse_relation(std::string_view text, std::optional<std::size_t> universe = std::nullopt);
std::string write_relation(const NamedRelation& r);

// One permutation per line as the images of 1..n, identity first.
std::string write_group_table(const PermutationGroup& g);
// One permutation per line in cycle notation, identity first.
std::string write_group_cycles(const PermutationGroup& g);

// Graph database files:
//
//   schema
//   vertex a
//   vertex b
//   edge ab a b
//   structure
//   vertex x1 of a
//   vertex y1 of b
//   edge x1 y1 true
//
// The result is not validated; call GraphDatabase::validate().
GraphDatabase parse_graph_database(std::string_view text);
std::string write_graph_database(const GraphDatabase& db);

// Instance files: "name: {v1,v2}" lines. A line reading "instance" starts a
// new instance; a file without such lines holds a single instance. An image
// outside Ext or a disconnected domain is a ParseError at the instance start.
std::vector<Instance> parse_instances(std::string_view text, const GraphDatabase& db);
std::string write_instances(const GraphDatabase& db, const std::vector<Instance>& instances);

std::string read_file(const std::string& path);

}  // namespace expresso
