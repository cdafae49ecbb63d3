// graph.hpp: finite multigraph support with boundary stubs and ghost vertices.
#ifndef RPM_GRAPH_HPP
#define RPM_GRAPH_HPP

#include <string>
#include <vector>

namespace rpm {

/** Marker used as the exterior endpoint of a boundary edge. */
inline const std::string kExternal = "EXT";

enum class EdgeKind { Interior, Boundary, Ghost };

/**
 * One edge slot in canonical order. Interior edges join two interior
 * vertices; boundary edges join an interior vertex to an anonymous exterior
 * endpoint; ghost edges join an interior vertex to the ghost vertex of one
 * colour and may only carry links of that colour.
 */
struct Edge {
    std::string u;
    std::string v;
    EdgeKind kind = EdgeKind::Interior;
    int ghost_colour = 0;
};

/**
 * Simple graph with an optional boundary and optional ghost extension.
 * Vertex and edge order are fixed by construction order and define the
 * canonical indices used by link configurations and reports.
 */
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges, int ghost_colours);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /** Ghost colour count: 0 when no ghosts are attached, otherwise the model dimension. */
    int ghost_colours() const { return ghost_colours_; }
    bool has_ghosts() const { return ghost_colours_ > 0; }
    bool has_boundary() const;

    int vertex_index(const std::string& name) const;

    /** Edge ids incident to an interior vertex, ascending. */
    const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }

    /** 1 if exactly one endpoint of the edge is the given interior vertex, 2 for both, else 0. */
    int endpoint_multiplicity(int edge, int vertex) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    int ghost_colours_ = 0;
};

/**
 * Validate and assemble a graph. Rejects repeated vertex names, self loops,
 * duplicate interior edges, unknown endpoints, and boundary edges whose
 * interior endpoint is missing.
 */
Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& boundary_vertices = {});

/**
 * Return a copy of the graph extended by one ghost vertex per colour and a
 * ghost edge {z, g_i} for every interior vertex z and colour i. The input
 * must not already carry ghosts.
 */
Graph attach_ghosts(const Graph& g, int colours);

/** Name of the ghost vertex for a colour (1-based). */
std::string ghost_name(int colour);

} // namespace rpm

#endif
