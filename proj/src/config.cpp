#include "rpm/config.hpp"

#include "rpm/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rpm {

LinkConfig::LinkConfig(const Graph* g, int colours) : graph_(g), colours_(colours) {
    if (colours < 1) {
        throw BadInput("colour count must be positive");
    }
    if (g->ghost_colours() != 0 && g->ghost_colours() != colours) {
        throw GraphMismatch("ghost colour count differs from configuration colours");
    }
    counts_.assign(static_cast<std::size_t>(g->edge_count()) * colours, 0);
}

void LinkConfig::set_count(int edge, int colour, int value) {
    if (value < 0) {
        throw BadInput("negative link count");
    }
    counts_[edge * colours_ + (colour - 1)] = value;
}

int LinkConfig::edge_total(int edge) const {
    int sum = 0;
    for (int c = 1; c <= colours_; ++c) {
        sum += count(edge, c);
    }
    return sum;
}

int LinkConfig::vertex_count(int vertex, int colour) const {
    int sum = 0;
    for (int e : graph_->incident(vertex)) {
        sum += count(e, colour) * graph_->endpoint_multiplicity(e, vertex);
    }
    return sum;
}

int LinkConfig::vertex_total(int vertex) const {
    int sum = 0;
    for (int c = 1; c <= colours_; ++c) {
        sum += vertex_count(vertex, c);
    }
    return sum;
}

long LinkConfig::total_links() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0L);
}

bool LinkConfig::operator==(const LinkConfig& other) const {
    return graph_ == other.graph_ && colours_ == other.colours_ && counts_ == other.counts_;
}

bool LinkConfig::operator<(const LinkConfig& other) const {
    return counts_ < other.counts_;
}

std::set<std::string> ParitySpec::odd_set() const {
    if (!B) {
        return A;
    }
    std::set<std::string> out;
    std::set_symmetric_difference(A.begin(), A.end(), B->begin(), B->end(),
                                  std::inserter(out, out.end()));
    return out;
}

std::set<std::string> ParitySpec::overlap_set() const {
    std::set<std::string> out;
    if (B) {
        std::set_intersection(A.begin(), A.end(), B->begin(), B->end(),
                              std::inserter(out, out.end()));
    }
    return out;
}

int local_time(const LinkConfig& m, int vertex, int colour) {
    return (m.vertex_count(vertex, colour) + 1) / 2;
}

int local_time_total(const LinkConfig& m, int vertex, const std::set<int>& overlap_vertices) {
    int sum = 0;
    for (int c = 1; c <= m.colours(); ++c) {
        sum += local_time(m, vertex, c);
    }
    if (overlap_vertices.count(vertex) > 0) {
        sum += 1;
    }
    return sum;
}

namespace {

void check_compatible(const LinkConfig& a, const LinkConfig& b) {
    if (a.graph() != b.graph() || a.colours() != b.colours()) {
        throw GraphMismatch("configurations live on different graphs");
    }
}

} // namespace

LinkConfig add(const LinkConfig& a, const LinkConfig& b) {
    check_compatible(a, b);
    LinkConfig out = a;
    for (int e = 0; e < a.graph()->edge_count(); ++e) {
        for (int c = 1; c <= a.colours(); ++c) {
            out.set_count(e, c, a.count(e, c) + b.count(e, c));
        }
    }
    return out;
}

LinkConfig sub(const LinkConfig& a, const LinkConfig& b) {
    check_compatible(a, b);
    if (!leq(b, a)) {
        throw NotDominated("subtrahend not dominated entrywise");
    }
    LinkConfig out = a;
    for (int e = 0; e < a.graph()->edge_count(); ++e) {
        for (int c = 1; c <= a.colours(); ++c) {
            out.set_count(e, c, a.count(e, c) - b.count(e, c));
        }
    }
    return out;
}

bool leq(const LinkConfig& b, const LinkConfig& a) {
    check_compatible(a, b);
    for (std::size_t i = 0; i < a.raw().size(); ++i) {
        if (b.raw()[i] > a.raw()[i]) {
            return false;
        }
    }
    return true;
}

bool in_parity_class(const LinkConfig& m, const ParitySpec& spec) {
    const Graph& g = *m.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[e];
        if (edge.kind == EdgeKind::Boundary) {
            for (int c = 2; c <= m.colours(); ++c) {
                if (m.count(e, c) != 0) {
                    return false;
                }
            }
        } else if (edge.kind == EdgeKind::Ghost) {
            for (int c = 1; c <= m.colours(); ++c) {
                if (c != edge.ghost_colour && m.count(e, c) != 0) {
                    return false;
                }
            }
        }
    }
    const auto odd = spec.odd_set();
    for (int z = 0; z < g.vertex_count(); ++z) {
        const bool want_odd = odd.count(g.vertices()[z]) > 0;
        if ((m.vertex_count(z, 1) % 2 == 1) != want_odd) {
            return false;
        }
        for (int c = 2; c <= m.colours(); ++c) {
            if (m.vertex_count(z, c) % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct EnumState {
    const Graph* g;
    int colours;
    const std::vector<int>* entry_caps;
    const std::set<std::string>* odd;
    const std::function<bool(const LinkConfig&)>* fn;
    std::vector<int> last_edge_of_vertex;
    bool stopped = false;
};

bool vertex_parities_ok(const EnumState& st, const LinkConfig& m, int vertex) {
    const bool want_odd = st.odd->count(st.g->vertices()[vertex]) > 0;
    if ((m.vertex_count(vertex, 1) % 2 == 1) != want_odd) {
        return false;
    }
    for (int c = 2; c <= st.colours; ++c) {
        if (m.vertex_count(vertex, c) % 2 != 0) {
            return false;
        }
    }
    return true;
}

void enumerate_recurse(EnumState& st, LinkConfig& m, int entry) {
    if (st.stopped) {
        return;
    }
    const int total_entries = st.g->edge_count() * st.colours;
    if (entry == total_entries) {
        if (!(*st.fn)(m)) {
            st.stopped = true;
        }
        return;
    }
    const int edge = entry / st.colours;
    const int colour = entry % st.colours + 1;
    const bool closes_edge = (colour == st.colours);
    for (int v = 0; v <= (*st.entry_caps)[entry]; ++v) {
        m.set_count(edge, colour, v);
        if (closes_edge) {
            bool ok = true;
            for (int z = 0; z < st.g->vertex_count(); ++z) {
                if (st.last_edge_of_vertex[z] == edge && !vertex_parities_ok(st, m, z)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
        }
        enumerate_recurse(st, m, entry + 1);
        if (st.stopped) {
            break;
        }
    }
    m.set_count(edge, colour, 0);
}

} // namespace

void enumerate_configs(const Graph& g, int colours, const std::vector<int>& entry_caps,
                       const ParitySpec& spec, const std::function<bool(const LinkConfig&)>& fn) {
    if (entry_caps.size() != static_cast<std::size_t>(g.edge_count()) * colours) {
        throw BadInput("entry cap vector size mismatch");
    }
    const auto odd = spec.odd_set();
    for (const auto& name : odd) {
        g.vertex_index(name);
    }
    EnumState st;
    st.g = &g;
    st.colours = colours;
    std::vector<int> caps = entry_caps;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[e];
        for (int c = 1; c <= colours; ++c) {
            const bool forbidden = (edge.kind == EdgeKind::Boundary && c >= 2) ||
                                   (edge.kind == EdgeKind::Ghost && c != edge.ghost_colour);
            if (forbidden) {
                caps[e * colours + (c - 1)] = 0;
            }
        }
    }
    st.entry_caps = &caps;
    st.odd = &odd;
    st.fn = &fn;
    st.last_edge_of_vertex.assign(g.vertex_count(), -1);
    for (int z = 0; z < g.vertex_count(); ++z) {
        for (int e : g.incident(z)) {
            st.last_edge_of_vertex[z] = std::max(st.last_edge_of_vertex[z], e);
        }
        if (st.last_edge_of_vertex[z] == -1 && odd.count(g.vertices()[z]) > 0) {
            return;
        }
    }
    LinkConfig m(&g, colours);
    enumerate_recurse(st, m, 0);
}

void enumerate_configs(const Graph& g, int colours, int cap, const ParitySpec& spec,
                       const std::function<bool(const LinkConfig&)>& fn) {
    std::vector<int> caps(static_cast<std::size_t>(g.edge_count()) * colours, cap);
    enumerate_configs(g, colours, caps, spec, fn);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    parent[find_root(parent, a)] = find_root(parent, b);
}

} // namespace

std::vector<Component> components(const LinkConfig& m) {
    const Graph& g = *m.graph();
    const int nv = g.vertex_count();
    const int ng = g.ghost_colours();
    std::vector<int> parent(nv + ng);
    for (std::size_t i = 0; i < parent.size(); ++i) {
        parent[i] = static_cast<int>(i);
    }
    std::vector<bool> touched(nv, false);
    std::vector<bool> boundary_flag(nv + ng, false);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (m.edge_total(e) == 0) {
            continue;
        }
        const Edge& edge = g.edges()[e];
        const int u = g.vertex_index(edge.u);
        touched[u] = true;
        if (edge.kind == EdgeKind::Interior) {
            const int v = g.vertex_index(edge.v);
            touched[v] = true;
            unite(parent, u, v);
        } else if (edge.kind == EdgeKind::Boundary) {
            boundary_flag[u] = true;
        } else {
            unite(parent, u, nv + edge.ghost_colour - 1);
        }
    }
    std::vector<int> root_to_component(nv + ng, -1);
    std::vector<Component> out;
    for (int z = 0; z < nv; ++z) {
        if (!touched[z]) {
            continue;
        }
        const int r = find_root(parent, z);
        if (root_to_component[r] == -1) {
            root_to_component[r] = static_cast<int>(out.size());
            out.push_back(Component{});
        }
        Component& comp = out[root_to_component[r]];
        comp.vertices.push_back(z);
        if (boundary_flag[z]) {
            comp.touches_boundary = true;
        }
    }
    if (ng >= 1) {
        const int r = find_root(parent, nv);
        if (root_to_component[r] != -1) {
            out[root_to_component[r]].touches_ghost_1 = true;
        }
    }
    return out;
}

bool in_F(const LinkConfig& m, const std::set<std::string>& B, bool plus,
          const std::set<std::string>& count_twice) {
    const Graph& g = *m.graph();
    std::vector<bool> touched(g.vertex_count(), false);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (m.edge_total(e) == 0) {
            continue;
        }
        const Edge& edge = g.edges()[e];
        touched[g.vertex_index(edge.u)] = true;
        if (edge.kind == EdgeKind::Interior) {
            touched[g.vertex_index(edge.v)] = true;
        }
    }
    std::set<std::string> marked = B;
    marked.insert(count_twice.begin(), count_twice.end());
    for (const auto& name : marked) {
        const int z = g.vertex_index(name);
        if (!touched[z]) {
            const int weight =
                (B.count(name) > 0 ? 1 : 0) + (count_twice.count(name) > 0 ? 1 : 0);
            if (weight % 2 != 0) {
                return false;
            }
        }
    }
    for (const Component& comp : components(m)) {
        if ((plus && comp.touches_boundary) || comp.touches_ghost_1) {
            continue;
        }
        int weight = 0;
        for (int z : comp.vertices) {
            const std::string& name = g.vertices()[z];
            weight += (B.count(name) > 0 ? 1 : 0) + (count_twice.count(name) > 0 ? 1 : 0);
        }
        if (weight % 2 != 0) {
            return false;
        }
    }
    return true;
}

} // namespace rpm
