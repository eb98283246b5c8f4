#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verlinde/graph.hpp"
#include "verlinde/weights.hpp"

namespace verlinde {

// Certified nearest-integer value of the trigonometric rank sum
//   ((k+2)/2)^{g-1} * sum_{n=1}^{k+1} sin(n pi / (k+2))^{-(2g-2)}.
// The enclosure is evaluated with directed rounding; radius bounds the
// distance from value to the true sum.
struct RankValue {
    long long value = 0;
    double radius = 0.0;
    int precision_bits = 0;
};

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kRankRadiusBound = 1e-6;

RankValue verlinde_rank(int genus, int level, int precision_bits = 128);

inline constexpr long long kDefaultTableBudget = 50'000'000;

// Exact number of labelings passing the vertex fusion conditions, computed
// by eliminating one edge variable at a time (greedy min-width order,
// ties broken by edge id). Never expands the full (k+1)^{3g-3} space.
long long fusion_count_contraction(const TrivalentGraph& g, int level,
                                   long long max_table = kDefaultTableBudget);

// Reconciliation record for one (genus, level) cell. The graph field is
// empty for grid-aggregate reports and set when the report covers a single
// isomorphism class.
struct CountReport {
    int genus = 0;
    int level = 0;
    std::optional<std::string> graph;  // certificate hex
    std::optional<long long> count_enumeration;
    long long count_contraction = 0;
    long long count_formula = 0;
    double formula_radius = 0.0;
    bool agreement = false;
};

// Runs the formula, the contraction on every isomorphism class of the genus,
// and (when the label space fits the budget) the enumeration count; the
// agreement flag requires all of them to coincide.
CountReport verify_rank_identity(int genus, int level,
                                 long long enum_budget = 2'000'000,
                                 int max_genus = 5,
                                 long long max_table = kDefaultTableBudget);

// Per-isomorphism-class contraction counts, in certificate order.
std::vector<std::pair<CanonicalCertificate, long long>> contraction_by_class(
    int genus, int level, int max_genus = 5, long long max_table = kDefaultTableBudget);

}  // namespace verlinde
