#include "rpm/measure.hpp"

#include "rpm/errors.hpp"
#include "rpm/pairing.hpp"

#include <algorithm>
#include <map>

namespace rpm {

Model make_model(const Graph& base, int colours, Eta eta,
                 const std::vector<std::vector<Rat>>& J,
                 const std::map<std::string, std::vector<Rat>>& h) {
    if (base.has_ghosts()) {
        throw BadInput("models are built over a base graph without ghosts");
    }
    if (colours < 1) {
        throw BadInput("colour count must be positive");
    }
    if (eta == Eta::Plus && !base.has_boundary()) {
        throw BadInput("plus boundary requires boundary edges");
    }
    if (eta == Eta::Free && base.has_boundary()) {
        throw BadInput("free boundary forbids boundary edges");
    }
    if (J.size() != static_cast<std::size_t>(base.edge_count())) {
        throw BadInput("coupling list size differs from edge count");
    }
    bool any_field = false;
    for (const auto& [name, values] : h) {
        base.vertex_index(name);
        if (values.size() != static_cast<std::size_t>(colours)) {
            throw BadInput("field vector length differs from colour count");
        }
        for (const auto& v : values) {
            if (v < 0) {
                throw BadInput("negative field at " + name);
            }
            if (v > 0) {
                any_field = true;
            }
        }
    }
    Model model;
    model.colours = colours;
    model.eta = eta;
    model.graph = std::make_shared<Graph>(any_field ? attach_ghosts(base, colours) : base);
    model.coupling.assign(static_cast<std::size_t>(model.graph->edge_count()) * colours, Rat(0));
    for (int e = 0; e < base.edge_count(); ++e) {
        if (J[e].size() != static_cast<std::size_t>(colours)) {
            throw BadInput("coupling vector length differs from colour count");
        }
        for (int c = 1; c <= colours; ++c) {
            const Rat& value = J[e][c - 1];
            if (value < 0) {
                throw BadInput("negative coupling");
            }
            if (value > 0 && base.edges()[e].kind == EdgeKind::Boundary && c >= 2) {
                throw BadInput("boundary edges couple colour 1 only");
            }
            model.coupling[static_cast<std::size_t>(e) * colours + (c - 1)] = value;
        }
    }
    for (int e = base.edge_count(); e < model.graph->edge_count(); ++e) {
        const Edge& edge = model.graph->edges()[e];
        const auto it = h.find(edge.u);
        if (it != h.end()) {
            model.coupling[static_cast<std::size_t>(e) * colours + (edge.ghost_colour - 1)] =
                it->second[edge.ghost_colour - 1];
        }
    }
    return model;
}

Model make_homogeneous_model(const Graph& base, int colours, Eta eta, const Rat& J) {
    std::vector<std::vector<Rat>> couplings;
    for (int e = 0; e < base.edge_count(); ++e) {
        std::vector<Rat> row(colours, J);
        if (base.edges()[e].kind == EdgeKind::Boundary) {
            for (int c = 2; c <= colours; ++c) {
                row[c - 1] = 0;
            }
        }
        couplings.push_back(std::move(row));
    }
    return make_model(base, colours, eta, couplings);
}

Rat vertex_weight(int colours, int r) {
    if (colours < 1 || r < 0) {
        throw BadInput("vertex weight needs positive dimension and nonnegative visits");
    }
    Rat out = 1;
    for (int j = 0; j < r; ++j) {
        out /= colours + 2 * j;
    }
    return out;
}

std::set<int> overlap_indices(const Model& model, const ParitySpec& spec) {
    std::set<int> out;
    for (const auto& name : spec.overlap_set()) {
        out.insert(model.graph->vertex_index(name));
    }
    return out;
}

Rat config_weight(const Model& model, const LinkConfig& m,
                  const std::set<int>& overlap_vertices) {
    if (m.graph() != model.graph.get() || m.colours() != model.colours) {
        throw GraphMismatch("configuration does not live on the model graph");
    }
    Rat w = 1;
    for (int e = 0; e < model.graph->edge_count(); ++e) {
        for (int c = 1; c <= model.colours; ++c) {
            const int k = m.count(e, c);
            if (k == 0) {
                continue;
            }
            const Rat& coupling = model.coupling_at(e, c);
            if (coupling == 0) {
                return 0;
            }
            w *= rat_pow(coupling, k) / Rat(factorial(k));
        }
    }
    const Int pairings = count_maximal_pairings(m, overlap_vertices);
    if (pairings == 0) {
        return 0;
    }
    w *= Rat(pairings);
    for (int z = 0; z < model.graph->vertex_count(); ++z) {
        w *= vertex_weight(model.colours, local_time_total(m, z, overlap_vertices));
    }
    return w;
}

namespace {

std::vector<int> support_caps(const Model& model, int cap) {
    std::vector<int> caps(static_cast<std::size_t>(model.graph->edge_count()) * model.colours, 0);
    for (int e = 0; e < model.graph->edge_count(); ++e) {
        for (int c = 1; c <= model.colours; ++c) {
            if (model.coupling_at(e, c) > 0) {
                caps[static_cast<std::size_t>(e) * model.colours + (c - 1)] = cap;
            }
        }
    }
    return caps;
}

std::set<int> odd_indices(const Model& model, const ParitySpec& spec) {
    std::set<int> out;
    for (const auto& name : spec.odd_set()) {
        out.insert(model.graph->vertex_index(name));
    }
    return out;
}

using TermMap = std::map<std::vector<int>, Rat>;

/**
 * Accumulate, for one colour, every admissible per-edge count vector reduced
 * to the per-vertex visit key, weighted by coupling powers over factorials
 * and the per-vertex pairing counts of that colour.
 */
struct ColourReduction {
    const Model* model;
    int colour;
    const std::set<int>* odd_vertices;
    const std::set<int>* overlap;
    std::vector<int> edge_cap;
    std::vector<int> last_edge_of_vertex;
    std::vector<int> vertex_load;
    Rat weight = 1;
    TermMap terms;

    void run(int cap) {
        const Graph& g = *model->graph;
        edge_cap.assign(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (model->coupling_at(e, colour) > 0) {
                edge_cap[e] = cap;
            }
        }
        last_edge_of_vertex.assign(g.vertex_count(), -1);
        for (int z = 0; z < g.vertex_count(); ++z) {
            for (int e : g.incident(z)) {
                last_edge_of_vertex[z] = std::max(last_edge_of_vertex[z], e);
            }
            if (last_edge_of_vertex[z] == -1 && odd_vertices->count(z) > 0) {
                return;
            }
        }
        vertex_load.assign(g.vertex_count(), 0);
        recurse(0);
    }

    bool parity_ok(int z) const {
        const bool want_odd = odd_vertices->count(z) > 0;
        return (vertex_load[z] % 2 == 1) == want_odd;
    }

    void recurse(int e) {
        const Graph& g = *model->graph;
        if (e == g.edge_count()) {
            Rat w = weight;
            std::vector<int> key(g.vertex_count());
            for (int z = 0; z < g.vertex_count(); ++z) {
                const int k = vertex_load[z];
                const Int np = (colour == 1 && overlap->count(z) > 0) ? two_singleton_count(k)
                                                                      : near_perfect_count(k);
                if (np == 0) {
                    return;
                }
                w *= Rat(np);
                key[z] = (k + 1) / 2;
            }
            terms[key] += w;
            return;
        }
        const Edge& edge = g.edges()[e];
        const int u = g.vertex_index(edge.u);
        const int v = (edge.kind == EdgeKind::Interior) ? g.vertex_index(edge.v) : -1;
        const Rat saved = weight;
        for (int k = 0; k <= edge_cap[e]; ++k) {
            if (k > 0) {
                weight = saved * rat_pow(model->coupling_at(e, colour), k) / Rat(factorial(k));
                vertex_load[u] += k;
                if (v >= 0) {
                    vertex_load[v] += k;
                }
            }
            bool ok = true;
            if (last_edge_of_vertex[u] == e && !parity_ok(u)) {
                ok = false;
            }
            if (ok && v >= 0 && last_edge_of_vertex[v] == e && !parity_ok(v)) {
                ok = false;
            }
            if (ok) {
                recurse(e + 1);
            }
            if (k > 0) {
                vertex_load[u] -= k;
                if (v >= 0) {
                    vertex_load[v] -= k;
                }
            }
        }
        weight = saved;
    }
};

TermMap convolve(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ka, wa] : a) {
        for (const auto& [kb, wb] : b) {
            std::vector<int> key(ka.size());
            for (std::size_t i = 0; i < key.size(); ++i) {
                key[i] = ka[i] + kb[i];
            }
            out[key] += wa * wb;
        }
    }
    return out;
}

} // namespace

Rat partition_sum(const Model& model, const ParitySpec& spec, int cap) {
    const auto odd = odd_indices(model, spec);
    const auto overlap = overlap_indices(model, spec);
    const std::set<int> none;
    TermMap acc;
    acc[std::vector<int>(model.graph->vertex_count(), 0)] = 1;
    for (int c = 1; c <= model.colours; ++c) {
        ColourReduction red;
        red.model = &model;
        red.colour = c;
        red.odd_vertices = (c == 1) ? &odd : &none;
        red.overlap = &overlap;
        red.run(cap);
        acc = convolve(acc, red.terms);
        if (acc.empty()) {
            return 0;
        }
    }
    Rat total = 0;
    for (const auto& [key, w] : acc) {
        Rat u = 1;
        for (int z = 0; z < model.graph->vertex_count(); ++z) {
            const int shift = overlap.count(z) > 0 ? 1 : 0;
            u *= vertex_weight(model.colours, key[z] + shift);
        }
        total += w * u;
    }
    return total;
}

Rat partition_sum_brute(const Model& model, const ParitySpec& spec, int cap) {
    const auto overlap = overlap_indices(model, spec);
    Rat total = 0;
    enumerate_configs(*model.graph, model.colours, support_caps(model, cap), spec,
                      [&](const LinkConfig& m) {
                          total += config_weight(model, m, overlap);
                          return true;
                      });
    return total;
}

namespace {

/** Singleton prescription realising the class pattern of a spec. */
int class_singletons(const LinkConfig& m, int vertex, int colour, const std::set<int>& odd,
                     const std::set<int>& overlap) {
    if (colour != 1) {
        return 0;
    }
    (void)m;
    if (overlap.count(vertex) > 0) {
        return 2;
    }
    return odd.count(vertex) > 0 ? 1 : 0;
}

std::vector<int> allowed_colours(const Model& model, int edge) {
    std::vector<int> out;
    for (int c = 1; c <= model.colours; ++c) {
        const bool structural = model.graph->edges()[edge].kind != EdgeKind::Boundary || c == 1;
        if (structural && model.coupling_at(edge, c) > 0) {
            out.push_back(c);
        }
    }
    return out;
}

void bump_states(long& states, long max_states) {
    if (++states > max_states) {
        throw InstanceTooLarge("state budget exhausted after " + std::to_string(max_states));
    }
}

} // namespace

Rat first_description_sum(const Model& model, const ParitySpec& spec, int cap, long max_states) {
    if (model.graph->has_ghosts()) {
        throw BadInput("labeled-link sums do not support ghost extensions");
    }
    const auto odd = odd_indices(model, spec);
    const auto overlap = overlap_indices(model, spec);
    const Graph& g = *model.graph;
    std::map<std::pair<int, int>, Int> match_memo;
    auto match_count = [&](int k, int s) -> const Int& {
        const auto key = std::make_pair(k, s);
        auto it = match_memo.find(key);
        if (it == match_memo.end()) {
            it = match_memo.emplace(key, matchings_with_singletons_brute(k, s)).first;
        }
        return it->second;
    };
    std::map<std::pair<int, std::vector<int>>, Int> colouring_memo;
    auto colouring_count = [&](int edge, const std::vector<int>& split) -> const Int& {
        const auto key = std::make_pair(edge, split);
        auto it = colouring_memo.find(key);
        if (it == colouring_memo.end()) {
            const auto alphabet = allowed_colours(model, edge);
            int length = 0;
            for (int s : split) {
                length += s;
            }
            Int count = 0;
            std::vector<int> tally(model.colours, 0);
            auto rec = [&](auto&& self, int pos) -> void {
                if (pos == length) {
                    count += (tally == split) ? 1 : 0;
                    return;
                }
                for (int c : alphabet) {
                    if (tally[c - 1] < split[c - 1]) {
                        ++tally[c - 1];
                        self(self, pos + 1);
                        --tally[c - 1];
                    }
                }
            };
            rec(rec, 0);
            it = colouring_memo.emplace(key, count).first;
        }
        return it->second;
    };
    long states = 0;
    Rat total = 0;
    enumerate_configs(g, model.colours, support_caps(model, cap), spec, [&](const LinkConfig& m) {
        bump_states(states, max_states);
        Rat w = 1;
        for (int e = 0; e < g.edge_count(); ++e) {
            std::vector<int> split(model.colours);
            int load = 0;
            for (int c = 1; c <= model.colours; ++c) {
                split[c - 1] = m.count(e, c);
                load += split[c - 1];
                if (split[c - 1] > 0) {
                    w *= rat_pow(model.coupling_at(e, c), split[c - 1]);
                }
            }
            if (load > 0) {
                w *= Rat(colouring_count(e, split)) / Rat(factorial(load));
            }
        }
        if (w == 0) {
            return true;
        }
        for (int z = 0; z < g.vertex_count(); ++z) {
            int visits = 0;
            for (int c = 1; c <= model.colours; ++c) {
                const int k = m.vertex_count(z, c);
                const int s = class_singletons(m, z, c, odd, overlap);
                const Int matches = match_count(k, s);
                if (matches == 0) {
                    return true;
                }
                w *= Rat(matches);
                visits += (k + s) / 2;
            }
            w *= vertex_weight(model.colours, visits);
        }
        total += w;
        return true;
    });
    return total;
}

Rat first_description_sum_joint(const Model& model, const ParitySpec& spec, int cap,
                                long max_states) {
    if (model.graph->has_ghosts()) {
        throw BadInput("labeled-link sums do not support ghost extensions");
    }
    const auto odd = odd_indices(model, spec);
    const auto overlap = overlap_indices(model, spec);
    const Graph& g = *model.graph;
    long states = 0;
    Rat total = 0;
    LinkConfig m(model.graph.get(), model.colours);
    std::vector<int> edge_load(g.edge_count(), 0);
    auto process_config = [&]() {
        Rat base = 1;
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int c = 1; c <= model.colours; ++c) {
                const int k = m.count(e, c);
                if (k > 0) {
                    base *= rat_pow(model.coupling_at(e, c), k);
                }
            }
            if (edge_load[e] > 0) {
                base /= Rat(factorial(edge_load[e]));
            }
        }
        const LinkTable table = LinkTable::build(m);
        enumerate_pairings_with_singletons(
            table,
            [&](int z, int c) { return class_singletons(m, z, c, odd, overlap); },
            [&](const Pairing& p) {
                bump_states(states, max_states);
                Rat w = base;
                for (int z = 0; z < g.vertex_count(); ++z) {
                    w *= vertex_weight(model.colours, block_count_at(table, p, z));
                }
                total += w;
                return true;
            });
    };
    auto rec_edge = [&](auto&& self, int e) -> void {
        if (e == g.edge_count()) {
            process_config();
            return;
        }
        const auto alphabet = allowed_colours(model, e);
        int max_load = 0;
        for (int c : alphabet) {
            (void)c;
            max_load += cap;
        }
        auto rec_seq = [&](auto&& seq_self, int remaining) -> void {
            if (remaining == 0) {
                self(self, e + 1);
                return;
            }
            for (int c : alphabet) {
                if (m.count(e, c) >= cap) {
                    continue;
                }
                bump_states(states, max_states);
                m.set_count(e, c, m.count(e, c) + 1);
                seq_self(seq_self, remaining - 1);
                m.set_count(e, c, m.count(e, c) - 1);
            }
        };
        for (int load = 0; load <= max_load; ++load) {
            edge_load[e] = load;
            rec_seq(rec_seq, load);
        }
        edge_load[e] = 0;
    };
    rec_edge(rec_edge, 0);
    return total;
}

Rat correlation(const Model& model, const ParitySpec& spec, int cap) {
    if (model.eta == Eta::Free && !model.graph->has_ghosts() && !model.graph->has_boundary() &&
        spec.odd_set().size() % 2 == 1) {
        return 0;
    }
    const Rat numerator = partition_sum(model, spec, cap);
    const Rat denominator = partition_sum(model, ParitySpec{}, cap);
    return numerator / denominator;
}

ConvergeResult converge(const Model& model, const ParitySpec& spec, const Rat& tol, int max_cap) {
    Rat previous;
    bool have_previous = false;
    for (int cap = 1; cap <= max_cap; ++cap) {
        Rat value = correlation(model, spec, cap);
        if (have_previous) {
            Rat delta = value - previous;
            if (delta < 0) {
                delta = -delta;
            }
            if (delta < tol) {
                return ConvergeResult{value, cap};
            }
        }
        previous = value;
        have_previous = true;
    }
    throw CapLimitExceeded("no convergence within cap " + std::to_string(max_cap));
}

} // namespace rpm
