#include "rpm/graph.hpp"

#include "rpm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rpm {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges, int ghost_colours)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), ghost_colours_(ghost_colours) {
    incident_.assign(vertices_.size(), {});
    for (int e = 0; e < edge_count(); ++e) {
        for (int z = 0; z < vertex_count(); ++z) {
            if (endpoint_multiplicity(e, z) > 0) {
                incident_[z].push_back(e);
            }
        }
    }
}

bool Graph::has_boundary() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.kind == EdgeKind::Boundary; });
}

int Graph::vertex_index(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i) {
        if (vertices_[i] == name) {
            return i;
        }
    }
    throw UnknownVertex("unknown vertex: " + name);
}

int Graph::endpoint_multiplicity(int edge, int vertex) const {
    const Edge& e = edges_[edge];
    const std::string& name = vertices_[vertex];
    int mult = 0;
    if (e.u == name) {
        ++mult;
    }
    if (e.kind == EdgeKind::Interior && e.v == name) {
        ++mult;
    }
    return mult;
}

std::string ghost_name(int colour) {
    return "g" + std::to_string(colour);
}

Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& boundary_vertices) {
    auto reserved = [](const std::string& v) {
        if (v.size() < 2 || v[0] != 'g') {
            return false;
        }
        return std::all_of(v.begin() + 1, v.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    std::set<std::string> seen_names;
    for (const auto& v : vertices) {
        if (v == kExternal || v.empty() || reserved(v)) {
            throw BadInput("reserved or empty vertex name: " + v);
        }
        if (!seen_names.insert(v).second) {
            throw BadInput("repeated vertex name: " + v);
        }
    }
    auto known = [&](const std::string& v) { return seen_names.count(v) > 0; };

    std::vector<Edge> out;
    std::set<std::pair<std::string, std::string>> seen_edges;
    for (const auto& [u, v] : edges) {
        if (u == v) {
            throw SelfLoop("self loop at " + u);
        }
        if (!known(u) || !known(v)) {
            throw UnknownVertex("edge endpoint not a vertex: {" + u + "," + v + "}");
        }
        auto key = std::minmax(u, v);
        if (!seen_edges.insert(key).second) {
            throw DuplicateEdge("duplicate edge {" + u + "," + v + "}");
        }
        out.push_back(Edge{u, v, EdgeKind::Interior, 0});
    }
    std::multiset<std::string> seen_boundary;
    for (const auto& u : boundary_vertices) {
        if (!known(u)) {
            throw BadBoundaryEdge("boundary edge at unknown vertex: " + u);
        }
        if (seen_boundary.count(u) > 0) {
            throw BadBoundaryEdge("repeated boundary edge at " + u);
        }
        seen_boundary.insert(u);
        out.push_back(Edge{u, kExternal, EdgeKind::Boundary, 0});
    }
    return Graph(vertices, out, 0);
}

Graph attach_ghosts(const Graph& g, int colours) {
    if (g.has_ghosts()) {
        throw BadInput("graph already carries ghosts");
    }
    if (colours < 1) {
        throw BadInput("ghost colour count must be positive");
    }
    std::vector<Edge> edges = g.edges();
    for (int i = 1; i <= colours; ++i) {
        for (const auto& z : g.vertices()) {
            edges.push_back(Edge{z, ghost_name(i), EdgeKind::Ghost, i});
        }
    }
    return Graph(g.vertices(), std::move(edges), colours);
}

} // namespace rpm
