#include "rpm/pairing.hpp"

#include "rpm/errors.hpp"

#include <algorithm>
#include <tuple>

namespace rpm {

Int near_perfect_count(int k) {
    if (k < 0) {
        throw BadInput("negative group size");
    }
    if (k % 2 == 0) {
        return double_factorial(k - 1);
    }
    return Int(k) * double_factorial(k - 2);
}

Int two_singleton_count(int k) {
    if (k < 2 || k % 2 != 0) {
        return 0;
    }
    return binomial(k, 2) * double_factorial(k - 3);
}

void enumerate_pair_partitions(
    int k, int singletons,
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn) {
    if (singletons < 0 || singletons > k || (k - singletons) % 2 != 0) {
        return;
    }
    std::vector<bool> used(k, false);
    std::vector<std::pair<int, int>> blocks;
    bool stopped = false;
    auto rec = [&](auto&& self, int singles_left, int remaining) -> void {
        if (stopped) {
            return;
        }
        if (remaining == 0) {
            if (singles_left == 0 && !fn(blocks)) {
                stopped = true;
            }
            return;
        }
        if (singles_left > remaining || (remaining - singles_left) % 2 != 0) {
            return;
        }
        int a = 0;
        while (used[a]) {
            ++a;
        }
        used[a] = true;
        if (singles_left > 0) {
            blocks.emplace_back(a, -1);
            self(self, singles_left - 1, remaining - 1);
            blocks.pop_back();
        }
        if (!stopped) {
            for (int b = a + 1; b < k; ++b) {
                if (used[b]) {
                    continue;
                }
                used[b] = true;
                blocks.emplace_back(a, b);
                self(self, singles_left, remaining - 2);
                blocks.pop_back();
                used[b] = false;
                if (stopped) {
                    break;
                }
            }
        }
        used[a] = false;
    };
    rec(rec, singletons, k);
}

Int matchings_with_singletons_brute(int k, int s) {
    Int count = 0;
    enumerate_pair_partitions(k, s, [&](const auto&) {
        ++count;
        return true;
    });
    return count;
}

Int near_perfect_count_brute(int k) {
    return matchings_with_singletons_brute(k, k % 2);
}

Int two_singleton_count_brute(int k) {
    return matchings_with_singletons_brute(k, 2);
}

LinkTable LinkTable::build(const LinkConfig& m) {
    LinkTable t;
    t.graph = m.graph();
    t.config = &m;
    for (int e = 0; e < m.graph()->edge_count(); ++e) {
        for (int c = 1; c <= m.colours(); ++c) {
            for (int i = 0; i < m.count(e, c); ++i) {
                t.links.push_back({e, c, i});
            }
        }
    }
    return t;
}

int LinkTable::link_id(int edge, int colour, int index) const {
    for (int l = 0; l < link_count(); ++l) {
        if (links[l][0] == edge && links[l][1] == colour && links[l][2] == index) {
            return l;
        }
    }
    throw BadInput("no such link");
}

int LinkTable::end_vertex(int end) const {
    const int link = end / 2;
    const int side = end % 2;
    const Edge& e = graph->edges()[links[link][0]];
    if (side == 0) {
        return graph->vertex_index(e.u);
    }
    if (e.kind == EdgeKind::Interior) {
        return graph->vertex_index(e.v);
    }
    return -1;
}

bool LinkTable::terminal_end(int end) const {
    return end % 2 == 1 && graph->edges()[links[end / 2][0]].kind != EdgeKind::Interior;
}

std::vector<int> LinkTable::ends_at(int vertex, int colour) const {
    std::vector<int> out;
    for (int l = 0; l < link_count(); ++l) {
        if (links[l][1] != colour) {
            continue;
        }
        for (int side = 0; side < 2; ++side) {
            const int end = 2 * l + side;
            if (!terminal_end(end) && end_vertex(end) == vertex) {
                out.push_back(end);
            }
        }
    }
    return out;
}

namespace {

struct Group {
    std::vector<int> ends;
    int singletons = 0;
};

void enumerate_groups(const LinkTable& table, const std::vector<Group>& groups,
                      const std::function<bool(const Pairing&)>& fn) {
    Pairing p;
    p.partner.assign(2 * table.link_count(), -1);
    for (int end = 0; end < 2 * table.link_count(); ++end) {
        if (table.terminal_end(end)) {
            p.partner[end] = -2;
        }
    }
    bool stopped = false;
    auto rec = [&](auto&& self, std::size_t g) -> void {
        if (stopped) {
            return;
        }
        if (g == groups.size()) {
            if (!fn(p)) {
                stopped = true;
            }
            return;
        }
        const Group& group = groups[g];
        const int k = static_cast<int>(group.ends.size());
        enumerate_pair_partitions(k, group.singletons, [&](const auto& blocks) {
            for (const auto& [a, b] : blocks) {
                if (b >= 0) {
                    p.partner[group.ends[a]] = group.ends[b];
                    p.partner[group.ends[b]] = group.ends[a];
                }
            }
            self(self, g + 1);
            for (const auto& [a, b] : blocks) {
                if (b >= 0) {
                    p.partner[group.ends[a]] = -1;
                    p.partner[group.ends[b]] = -1;
                }
            }
            return !stopped;
        });
    };
    rec(rec, 0);
}

} // namespace

void enumerate_pairings_with_singletons(const LinkTable& table,
                                        const std::function<int(int, int)>& singleton_count,
                                        const std::function<bool(const Pairing&)>& fn) {
    std::vector<Group> groups;
    for (int z = 0; z < table.graph->vertex_count(); ++z) {
        for (int c = 1; c <= table.config->colours(); ++c) {
            Group g;
            g.ends = table.ends_at(z, c);
            g.singletons = singleton_count(z, c);
            const int k = static_cast<int>(g.ends.size());
            if (g.singletons < 0 || g.singletons > k || (k - g.singletons) % 2 != 0) {
                return;
            }
            if (k > 0) {
                groups.push_back(std::move(g));
            }
        }
    }
    enumerate_groups(table, groups, fn);
}

void enumerate_maximal_pairings(const LinkTable& table, const std::set<int>& overlap_vertices,
                                const std::function<bool(const Pairing&)>& fn) {
    for (int z : overlap_vertices) {
        if (table.config->vertex_count(z, 1) % 2 != 0) {
            throw OverlapParity("odd colour-1 count at overlap vertex " +
                                table.graph->vertices()[z]);
        }
    }
    enumerate_pairings_with_singletons(
        table,
        [&](int z, int c) {
            const int k = table.config->vertex_count(z, c);
            if (c == 1 && overlap_vertices.count(z) > 0) {
                return 2;
            }
            return k % 2;
        },
        fn);
}

Int count_maximal_pairings(const LinkConfig& m, const std::set<int>& overlap_vertices) {
    Int out = 1;
    for (int z = 0; z < m.graph()->vertex_count(); ++z) {
        for (int c = 1; c <= m.colours(); ++c) {
            const int k = m.vertex_count(z, c);
            if (c == 1 && overlap_vertices.count(z) > 0) {
                out *= two_singleton_count(k);
            } else {
                out *= near_perfect_count(k);
            }
            if (out == 0) {
                return 0;
            }
        }
    }
    return out;
}

namespace {

LinkEnd make_link_end(const LinkTable& table, int end) {
    const auto& l = table.links[end / 2];
    return LinkEnd{l[0], l[1], l[2], end % 2};
}

} // namespace

std::vector<Block> blocks_at(const LinkTable& table, const Pairing& p, int vertex) {
    std::vector<Block> out;
    for (int end = 0; end < 2 * table.link_count(); ++end) {
        if (table.terminal_end(end) || table.end_vertex(end) != vertex) {
            continue;
        }
        const int mate = p.partner[end];
        if (mate == -1) {
            Block b;
            b.vertex = vertex;
            b.colour = table.links[end / 2][1];
            b.ends.push_back(make_link_end(table, end));
            out.push_back(std::move(b));
        } else if (mate > end) {
            Block b;
            b.vertex = vertex;
            b.colour = table.links[end / 2][1];
            b.ends.push_back(make_link_end(table, end));
            b.ends.push_back(make_link_end(table, mate));
            out.push_back(std::move(b));
        }
    }
    return out;
}

int block_count_at(const LinkTable& table, const Pairing& p, int vertex) {
    return static_cast<int>(blocks_at(table, p, vertex).size());
}

std::vector<Block> order_pairs(const LinkTable& table, const Pairing& p, int vertex) {
    std::vector<Block> out = blocks_at(table, p, vertex);
    auto key = [](const Block& b) {
        int best_index = b.ends[0].index;
        int best_edge = b.ends[0].edge;
        for (const auto& e : b.ends) {
            if (std::tie(e.index, e.edge) < std::tie(best_index, best_edge)) {
                best_index = e.index;
                best_edge = e.edge;
            }
        }
        return std::make_tuple(b.colour, best_index, best_edge);
    };
    std::sort(out.begin(), out.end(),
              [&](const Block& a, const Block& b) { return key(a) < key(b); });
    return out;
}

namespace {

WalkEndpoint endpoint_of(const LinkTable& table, int end) {
    if (table.terminal_end(end)) {
        const int edge = table.links[end / 2][0];
        const Edge& e = table.graph->edges()[edge];
        if (e.kind == EdgeKind::Boundary) {
            return WalkEndpoint{1, edge};
        }
        return WalkEndpoint{2, e.ghost_colour};
    }
    return WalkEndpoint{0, table.end_vertex(end)};
}

} // namespace

PathDecomposition trace_paths(const LinkTable& table, const Pairing& p) {
    PathDecomposition out;
    const int ends = 2 * table.link_count();
    std::vector<bool> visited(ends, false);
    for (int start = 0; start < ends; ++start) {
        if (visited[start] || p.partner[start] >= 0) {
            continue;
        }
        std::vector<int> links;
        int cur = start;
        visited[cur] = true;
        int last;
        while (true) {
            const int other = cur ^ 1;
            visited[other] = true;
            links.push_back(cur / 2);
            if (p.partner[other] < 0) {
                last = other;
                break;
            }
            cur = p.partner[other];
            visited[cur] = true;
        }
        Walk w;
        w.from = endpoint_of(table, start);
        w.to = endpoint_of(table, last);
        w.links = links;
        w.colour = table.links[links.front()][1];
        const bool reverse = (w.to < w.from) || (w.to == w.from && last < start);
        if (reverse) {
            std::swap(w.from, w.to);
            std::reverse(w.links.begin(), w.links.end());
        }
        out.walks.push_back(std::move(w));
    }
    for (int start = 0; start < ends; ++start) {
        if (visited[start]) {
            continue;
        }
        Loop loop;
        int cur = start;
        do {
            visited[cur] = true;
            const int other = cur ^ 1;
            visited[other] = true;
            loop.links.push_back(cur / 2);
            cur = p.partner[other];
        } while (cur != start);
        loop.colour = table.links[loop.links.front()][1];
        out.loops.push_back(std::move(loop));
    }
    return out;
}

namespace {

/** Union-find with parity between an element and its root. */
struct ParityForest {
    std::vector<int> parent;
    std::vector<int> parity;

    explicit ParityForest(int n) : parent(n), parity(n, 0) {
        for (int i = 0; i < n; ++i) {
            parent[i] = i;
        }
    }

    std::pair<int, int> find(int x) {
        int par = 0;
        int root = x;
        while (parent[root] != root) {
            par ^= parity[root];
            root = parent[root];
        }
        return {root, par};
    }

    /** Merge with the relation value(a) xor value(b) == rel; false on conflict. */
    bool merge(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            return (pa ^ pb) == rel;
        }
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ rel;
        return true;
    }
};

} // namespace

bool walk_split_feasible(const PathDecomposition& paths, const std::set<int>& A,
                         const std::set<int>& B, const std::set<int>& overlap_vertices) {
    const int walk_count = static_cast<int>(paths.walks.size());
    // Slot ids: 2w and 2w+1 per walk; two virtual nodes force the families apart.
    const int node_a = 2 * walk_count;
    const int node_b = 2 * walk_count + 1;
    ParityForest forest(2 * walk_count + 2);
    if (!forest.merge(node_a, node_b, 1)) {
        return false;
    }
    std::vector<std::vector<std::pair<int, int>>> slots_at; // (slot, colour) per overlap vertex
    std::vector<int> overlap_list(overlap_vertices.begin(), overlap_vertices.end());
    slots_at.resize(overlap_list.size());
    auto overlap_pos = [&](int z) {
        for (std::size_t i = 0; i < overlap_list.size(); ++i) {
            if (overlap_list[i] == z) {
                return static_cast<int>(i);
            }
        }
        return -1;
    };
    for (int w = 0; w < walk_count; ++w) {
        const Walk& walk = paths.walks[w];
        const WalkEndpoint* eps[2] = {&walk.from, &walk.to};
        if (walk.from.kind == 0 && walk.to.kind == 0) {
            if (!forest.merge(2 * w, 2 * w + 1, 0)) {
                return false;
            }
        }
        for (int s = 0; s < 2; ++s) {
            if (eps[s]->kind != 0) {
                continue;
            }
            const int z = eps[s]->id;
            const int slot = 2 * w + s;
            const int pos = overlap_pos(z);
            if (pos >= 0) {
                slots_at[pos].emplace_back(slot, walk.colour);
                continue;
            }
            const bool in_a = A.count(z) > 0;
            const bool in_b = B.count(z) > 0;
            if (in_a && !forest.merge(slot, node_a, 0)) {
                return false;
            }
            if (in_b && !forest.merge(slot, node_b, 0)) {
                return false;
            }
        }
    }
    for (const auto& slots : slots_at) {
        // The two slots at an overlap vertex take opposite families; any other
        // arrangement is outside the overlap convention.
        if (slots.size() != 2 || slots[0].second != 1 || slots[1].second != 1) {
            return false;
        }
        if (!forest.merge(slots[0].first, slots[1].first, 1)) {
            return false;
        }
    }
    return true;
}

Int count_pairings_AB(const LinkConfig& m, const std::set<int>& A, const std::set<int>& B,
                      const std::set<int>& overlap_vertices) {
    std::set<int> sym_diff;
    for (int z : A) {
        if (B.count(z) == 0) {
            sym_diff.insert(z);
        }
    }
    for (int z : B) {
        if (A.count(z) == 0) {
            sym_diff.insert(z);
        }
    }
    for (int z = 0; z < m.graph()->vertex_count(); ++z) {
        const bool want_odd = sym_diff.count(z) > 0;
        if ((m.vertex_count(z, 1) % 2 == 1) != want_odd) {
            throw ParityMismatch("odd colour-1 vertices differ from the symmetric difference");
        }
    }
    const LinkTable table = LinkTable::build(m);
    Int count = 0;
    enumerate_maximal_pairings(table, overlap_vertices, [&](const Pairing& p) {
        if (walk_split_feasible(trace_paths(table, p), A, B, overlap_vertices)) {
            ++count;
        }
        return true;
    });
    return count;
}

} // namespace rpm
