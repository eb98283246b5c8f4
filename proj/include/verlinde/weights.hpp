#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "verlinde/graph.hpp"

namespace verlinde {

using Rational = boost::rational<long long>;

// Integer edge labeling a(E) in {0..k} at level k, the 2k-fold multiple of
// the half-open weight w(E) = a(E)/2k in {0, 1/2k, ..., 1/2}.
struct Weight {
    int level = 0;
    std::vector<int> labels;  // indexed by edge id
};

enum class WeightDefect {
    None,
    LabelOutOfRange,
    LabelCountMismatch,
    BridgeParity,    // condition 0: disconnecting edges carry even labels
    VertexParity,    // condition 1: label sum at each vertex is even
    VertexSumBound,  // condition 2: label sum at each vertex is <= 2k
    Triangle,        // condition 3: Clebsch-Gordan triangle inequalities
};

struct AdmissibilityResult {
    WeightDefect defect = WeightDefect::None;
    int where = -1;  // edge id for 0, vertex id for 1-3

    bool ok() const { return defect == WeightDefect::None; }
    std::string message() const;
};

// First violated condition in the order 0, then per vertex 1-3.
AdmissibilityResult is_admissible(const TrivalentGraph& g, const Weight& w);

// Loop labels count twice at their vertex: the triple reads (a, a, other).
bool vertex_conditions_hold(int x, int y, int z, int level);

inline constexpr long long kDefaultWeightBudget = 10'000'000;

// All admissible weights in lexicographic label order (by edge id).
// Throws BudgetExceeded when more than max_count weights would be produced.
std::vector<Weight> enumerate_weights(const TrivalentGraph& g, int level,
                                      long long max_count = kDefaultWeightBudget);

long long count_weights(const TrivalentGraph& g, int level,
                        long long max_count = kDefaultWeightBudget);

// Partition of the admissible weights on gamma0(g) into the Abelian part
// (zero on every c_i, equal labels on each a_i/a'_i pair) and the rest.
struct AbelianSplit {
    std::vector<Weight> abelian;
    std::vector<Weight> non_abelian;
};

AbelianSplit abelian_filter(const TrivalentGraph& gamma0_graph, int level,
                            long long max_count = kDefaultWeightBudget);

enum class Scale {
    Action,  // c = a/k, coordinates in [0,1]
    Half,    // w = a/2k, coordinates in [0,1/2]
};

struct ActionPoint {
    std::vector<Rational> coords;  // indexed by edge id
};

ActionPoint weight_to_action_point(const Weight& w, Scale scale = Scale::Action);

// True iff enumeration with condition 0 enforced equals enumeration with
// condition 0 dropped (vertex parity forces bridge evenness).
bool condition0_redundancy_check(const TrivalentGraph& g, int level,
                                 long long max_count = kDefaultWeightBudget);

// Thrown when an enumeration or contraction would exceed its configured cap.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace verlinde
