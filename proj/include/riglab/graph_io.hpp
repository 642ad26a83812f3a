#pragma once

#include <iosfwd>
#include <string>

#include "riglab/assignment.hpp"
#include "riglab/graph.hpp"

namespace riglab {

// Edge-list text format: "n m" header, then one "i j" pair per line, i < j.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);
void write_edge_list_file(const std::string& path, const Graph& g);
Graph read_edge_list_file(const std::string& path);

// JSON format: {"P": int, "sets": [[int, ...], ...]}
std::string assignment_to_json(const ObjectAssignment& a);
ObjectAssignment assignment_from_json(const std::string& text);

}  // namespace riglab
