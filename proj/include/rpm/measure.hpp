// measure.hpp: model parameters, configuration weights, partition sums, correlations.
#ifndef RPM_MEASURE_HPP
#define RPM_MEASURE_HPP

#include "rpm/config.hpp"
#include "rpm/graph.hpp"
#include "rpm/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rpm {

enum class Eta { Free, Plus };

/**
 * Spin dimension, boundary condition, and exact rational couplings over a
 * graph. External fields are carried as couplings on ghost edges, one ghost
 * per colour, so every weight computation treats edges uniformly.
 */
struct Model {
    std::shared_ptr<const Graph> graph;
    int colours = 0;
    Eta eta = Eta::Free;
    std::vector<Rat> coupling; // edge-major, colour-minor

    const Rat& coupling_at(int edge, int colour) const {
        return coupling[static_cast<std::size_t>(edge) * colours + (colour - 1)];
    }
};

/**
 * Assemble a model over a base graph without ghosts. J holds one coupling
 * vector of length `colours` per base edge (boundary edges may only couple
 * colour 1); h maps vertex names to field vectors of length `colours`. Any
 * nonzero field attaches ghosts for every colour. Free models must not carry
 * boundary edges.
 */
Model make_model(const Graph& base, int colours, Eta eta,
                 const std::vector<std::vector<Rat>>& J,
                 const std::map<std::string, std::vector<Rat>>& h = {});

/** Model with one homogeneous coupling on every edge and colour, no field. */
Model make_homogeneous_model(const Graph& base, int colours, Eta eta, const Rat& J);

/** Exact single-site weight: 1 / prod_{j<r} (colours + 2j). */
Rat vertex_weight(int colours, int r);

/**
 * Weight of one configuration inside the class selected by the overlap set:
 * coupling powers over per-colour factorials, the count of admissible
 * pairings, and the single-site weights at overlap-adjusted local times.
 * Intended for configurations in a parity class; support violations yield 0.
 */
Rat config_weight(const Model& model, const LinkConfig& m, const std::set<int>& overlap_vertices);

/** Class partition sum at an entrywise cap, by factorised per-colour reduction. */
Rat partition_sum(const Model& model, const ParitySpec& spec, int cap);

/** Reference partition sum by direct enumeration and per-configuration weights. */
Rat partition_sum_brute(const Model& model, const ParitySpec& spec, int cap);

/**
 * Class sum in the labeled-link description: uncoloured links with a
 * colouring function and a pairing whose unpaired colour-1 ends realise the
 * class pattern. Colourings are counted by per-edge brute enumeration and
 * pairings by singleton-prescribed brute enumeration; per-colour counts are
 * capped to match the support of the per-colour description. Throws
 * InstanceTooLarge past max_states streamed states.
 */
Rat first_description_sum(const Model& model, const ParitySpec& spec, int cap,
                          long max_states = 50'000'000);

/** Same sum with links, colouring, and pairing enumerated jointly (small instances). */
Rat first_description_sum_joint(const Model& model, const ParitySpec& spec, int cap,
                                long max_states = 50'000'000);

/** Correlation of the class against the empty class at one cap. */
Rat correlation(const Model& model, const ParitySpec& spec, int cap);

struct ConvergeResult {
    Rat value;
    int cap = 0;
};

/**
 * Escalate the cap until successive correlations differ by less than tol in
 * exact arithmetic; throws CapLimitExceeded past max_cap.
 */
ConvergeResult converge(const Model& model, const ParitySpec& spec, const Rat& tol,
                        int max_cap = 16);

/** Overlap vertex indices of a spec on a model's graph. */
std::set<int> overlap_indices(const Model& model, const ParitySpec& spec);

} // namespace rpm

#endif
