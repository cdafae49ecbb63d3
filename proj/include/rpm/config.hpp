// config.hpp: coloured link configurations, parity classes, and component tests.
#ifndef RPM_CONFIG_HPP
#define RPM_CONFIG_HPP

#include "rpm/graph.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rpm {

/**
 * Link counts per (edge, colour) over a fixed graph. Counts are stored
 * edge-major, colour-minor; colours are 1-based in the API.
 */
class LinkConfig {
public:
    LinkConfig() = default;
    LinkConfig(const Graph* g, int colours);

    const Graph* graph() const { return graph_; }
    int colours() const { return colours_; }

    int count(int edge, int colour) const { return counts_[edge * colours_ + (colour - 1)]; }
    void set_count(int edge, int colour, int value);

    /** Sum of counts over all colours on one edge. */
    int edge_total(int edge) const;

    /** m_z^i: links of one colour incident to an interior vertex. */
    int vertex_count(int vertex, int colour) const;

    /** m_z: links of all colours incident to an interior vertex. */
    int vertex_total(int vertex) const;

    /** Total number of links in the configuration. */
    long total_links() const;

    const std::vector<int>& raw() const { return counts_; }

    bool operator==(const LinkConfig& other) const;
    bool operator<(const LinkConfig& other) const;

private:
    const Graph* graph_ = nullptr;
    int colours_ = 0;
    std::vector<int> counts_;
};

/**
 * Correlation class selector: odd colour-1 parity on A, or on the symmetric
 * difference with two unpaired slots at the intersection when B is present.
 */
struct ParitySpec {
    std::set<std::string> A;
    std::optional<std::set<std::string>> B;

    /** Vertices whose colour-1 count must be odd. */
    std::set<std::string> odd_set() const;

    /** A ∩ B when B is present, else empty. */
    std::set<std::string> overlap_set() const;
};

/** n_z^i(m), the ceiling of half the incident colour-i count. */
int local_time(const LinkConfig& m, int vertex, int colour);

/**
 * n_z(m) summed over colours, plus one at overlap vertices where the class
 * keeps two colour-1 links unpaired.
 */
int local_time_total(const LinkConfig& m, int vertex, const std::set<int>& overlap_vertices);

/** Entrywise sum. Both configs must share graph and colour count. */
LinkConfig add(const LinkConfig& a, const LinkConfig& b);

/** Entrywise difference; throws NotDominated unless b <= a entrywise. */
LinkConfig sub(const LinkConfig& a, const LinkConfig& b);

/** Entrywise domination b <= a. */
bool leq(const LinkConfig& b, const LinkConfig& a);

/**
 * Membership in the parity class of the spec: colour-1 counts odd exactly on
 * the odd set, higher colours even at every interior vertex, no higher-colour
 * links on boundary edges, and ghost edges carrying only their own colour.
 */
bool in_parity_class(const LinkConfig& m, const ParitySpec& spec);

/**
 * Stream every configuration of the class with per-entry counts bounded by
 * the cap, in lexicographic order of the flattened count vector. Per-entry
 * caps may be supplied to restrict support. Return false from the callback
 * to stop early.
 */
void enumerate_configs(const Graph& g, int colours, int cap, const ParitySpec& spec,
                       const std::function<bool(const LinkConfig&)>& fn);
void enumerate_configs(const Graph& g, int colours, const std::vector<int>& entry_caps,
                       const ParitySpec& spec, const std::function<bool(const LinkConfig&)>& fn);

/** One connected component of the occupied multigraph. */
struct Component {
    std::vector<int> vertices;
    bool touches_boundary = false;
    bool touches_ghost_1 = false;
};

/**
 * Connected components of the multigraph spanned by occupied edges. Ghost
 * vertices merge components but are not listed; untouched interior vertices
 * are omitted.
 */
std::vector<Component> components(const LinkConfig& m);

/**
 * Parity indicator on the occupied multigraph: every component must contain
 * an even number of B-vertices (vertices in count_twice contribute twice),
 * unless the component is exempt by touching the boundary (plus mode) or the
 * colour-1 ghost vertex. B-vertices untouched by any link fail the test.
 */
bool in_F(const LinkConfig& m, const std::set<std::string>& B, bool plus,
          const std::set<std::string>& count_twice = {});

} // namespace rpm

#endif
