// pairing.hpp: link labelings, pairings with prescribed singletons, walks and loops.
#ifndef RPM_PAIRING_HPP
#define RPM_PAIRING_HPP

#include "rpm/config.hpp"
#include "rpm/rational.hpp"

#include <array>
#include <functional>
#include <set>
#include <vector>

namespace rpm {

/** Pairings of k items into pairs plus at most one leftover singleton. */
Int near_perfect_count(int k);
Int near_perfect_count_brute(int k);

/** Pairings of k items into pairs plus exactly two singletons. */
Int two_singleton_count(int k);
Int two_singleton_count_brute(int k);

/** Pairings of k items into pairs plus exactly s singletons, counted by enumeration. */
Int matchings_with_singletons_brute(int k, int s);

/**
 * Enumerate partitions of items 0..k-1 into pairs plus exactly `singletons`
 * singletons. Blocks arrive as (a, b) with a < b, or (a, -1) for a singleton,
 * sorted by first element. Return false from the callback to stop.
 */
void enumerate_pair_partitions(
    int k, int singletons,
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn);

/**
 * Global link labels for a configuration, in (edge, colour, index) order.
 * Link ends are identified as 2*link + side; side 0 is the end at edge.u,
 * side 1 the end at edge.v. The exterior side of a boundary or ghost edge is
 * a terminal end and never participates in pairings.
 */
struct LinkTable {
    const Graph* graph = nullptr;
    const LinkConfig* config = nullptr;
    std::vector<std::array<int, 3>> links;

    static LinkTable build(const LinkConfig& m);

    int link_count() const { return static_cast<int>(links.size()); }
    int link_id(int edge, int colour, int index) const;

    /** Interior vertex holding an end, or -1 for a terminal end. */
    int end_vertex(int end) const;
    bool terminal_end(int end) const;

    /** Pairable end ids at one interior vertex and colour, ascending. */
    std::vector<int> ends_at(int vertex, int colour) const;
};

/**
 * A pairing over the ends of a link table: partner[end] is the matched end,
 * -1 for an unpaired end, -2 for a terminal end.
 */
struct Pairing {
    std::vector<int> partner;
};

struct LinkEnd {
    int edge = 0;
    int colour = 0;
    int index = 0;
    int side = 0;
};

struct Block {
    int vertex = 0;
    int colour = 0;
    std::vector<LinkEnd> ends;
};

/**
 * Enumerate pairings with a prescribed singleton count per (vertex, colour):
 * remainder modulo two by default, two unpaired colour-1 ends at overlap
 * vertices. Throws OverlapParity when an overlap vertex carries an odd
 * colour-1 count. Return false from the callback to stop.
 */
void enumerate_maximal_pairings(const LinkTable& table, const std::set<int>& overlap_vertices,
                                const std::function<bool(const Pairing&)>& fn);

/**
 * Enumerate pairings whose singleton count at (vertex, colour) is given by
 * the prescription. Groups with infeasible prescriptions yield nothing.
 */
void enumerate_pairings_with_singletons(const LinkTable& table,
                                        const std::function<int(int, int)>& singleton_count,
                                        const std::function<bool(const Pairing&)>& fn);

/** Closed-form count of the pairings streamed by enumerate_maximal_pairings. */
Int count_maximal_pairings(const LinkConfig& m, const std::set<int>& overlap_vertices);

/** Blocks (pairs and singletons) of a pairing at one vertex, in end order. */
std::vector<Block> blocks_at(const LinkTable& table, const Pairing& p, int vertex);

/** Number of blocks of the pairing at one vertex, over all colours. */
int block_count_at(const LinkTable& table, const Pairing& p, int vertex);

/**
 * Blocks at one vertex in attachment order: colour-major, then by lowest
 * link label with ties broken by edge order.
 */
std::vector<Block> order_pairs(const LinkTable& table, const Pairing& p, int vertex);

/** Endpoint of a walk: an interior vertex, an anonymous exterior stub, or a ghost. */
struct WalkEndpoint {
    int kind = 0; // 0 interior, 1 exterior, 2 ghost
    int id = 0;   // vertex index, boundary edge id, or ghost colour

    friend bool operator<(const WalkEndpoint& a, const WalkEndpoint& b) {
        return std::tie(a.kind, a.id) < std::tie(b.kind, b.id);
    }
    friend bool operator==(const WalkEndpoint& a, const WalkEndpoint& b) {
        return a.kind == b.kind && a.id == b.id;
    }
};

struct Walk {
    WalkEndpoint from;
    WalkEndpoint to;
    std::vector<int> links;
    int colour = 0;
};

struct Loop {
    std::vector<int> links;
    int colour = 0;
};

struct PathDecomposition {
    std::vector<Walk> walks;
    std::vector<Loop> loops;
};

/**
 * Decompose a paired configuration into walks and loops with canonical
 * orientation: walks run from their smaller endpoint descriptor (interior
 * before exterior before ghost), loops start at their smallest end.
 */
PathDecomposition trace_paths(const LinkTable& table, const Pairing& p);

/**
 * Test whether walk endpoints admit a family split: endpoints at A-only
 * vertices take family A, at B-only vertices family B, the two endpoints at
 * an overlap vertex take opposite families, and no walk joins family A to
 * family B. With an empty overlap this is exactly the absence of walks from
 * A to B.
 */
bool walk_split_feasible(const PathDecomposition& paths, const std::set<int>& A,
                         const std::set<int>& B, const std::set<int>& overlap_vertices);

/**
 * Count pairings of m with no walk joining the A side to the B side, under
 * the overlap convention above. Throws ParityMismatch unless the odd
 * colour-1 vertices of m are exactly the symmetric difference.
 */
Int count_pairings_AB(const LinkConfig& m, const std::set<int>& A, const std::set<int>& B,
                      const std::set<int>& overlap_vertices);

} // namespace rpm

#endif
