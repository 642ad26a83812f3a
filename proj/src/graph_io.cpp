#include "riglab/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "riglab/errors.hpp"

namespace riglab {

void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.node_count() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edge_list()) os << i << ' ' << j << '\n';
}

Graph read_edge_list(std::istream& is) {
    int n = 0;
    std::int64_t m = 0;
    if (!(is >> n >> m)) throw io_error("bad edge-list header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t e = 0; e < m; ++e) {
        int i = 0, j = 0;
        if (!(is >> i >> j)) throw io_error("truncated edge list");
        edges.emplace_back(i, j);
    }
    return Graph::from_edges(n, edges);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw io_error("cannot open for writing: " + path);
    write_edge_list(f, g);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open for reading: " + path);
    return read_edge_list(f);
}

std::string assignment_to_json(const ObjectAssignment& a) {
    nlohmann::json j;
    j["P"] = a.pool_size;
    j["sets"] = a.sets;
    return j.dump();
}

ObjectAssignment assignment_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ObjectAssignment a;
    a.pool_size = j.at("P").get<std::int64_t>();
    a.sets = j.at("sets").get<std::vector<std::vector<std::int32_t>>>();
    a.validate();
    return a;
}

}  // namespace riglab
