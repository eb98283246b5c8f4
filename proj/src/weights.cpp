#include "verlinde/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

struct VertexSlots {
    std::array<int, 3> edge{};  // incident edge ids, loop repeated
};

std::vector<VertexSlots> vertex_slots(const TrivalentGraph& g) {
    auto triples = vertex_triples(g);
    std::vector<VertexSlots> out(triples.size());
    for (size_t i = 0; i < triples.size(); ++i) out[i].edge = triples[i].edges;
    return out;
}

struct DfsEnumerator {
    const TrivalentGraph& g;
    int level;
    bool enforce_condition0;
    long long max_count;

    std::vector<VertexSlots> slots;
    std::vector<char> is_bridge;
    std::vector<int> labels;  // -1 = unassigned
    long long found = 0;
    std::function<void(const std::vector<int>&)> sink;

    DfsEnumerator(const TrivalentGraph& graph, int k, bool cond0, long long cap)
        : g(graph), level(k), enforce_condition0(cond0), max_count(cap) {
        slots = vertex_slots(g);
        is_bridge.assign(g.edge_count(), 0);
        for (int b : bridges(g)) is_bridge[b] = 1;
        labels.assign(g.edge_count(), -1);
    }

    // full check when all three slots are set, range feasibility when two are
    bool vertex_feasible(const VertexSlots& s) const {
        int vals[3];
        int unset = 0, unset_at = -1;
        for (int i = 0; i < 3; ++i) {
            vals[i] = labels[s.edge[i]];
            if (vals[i] < 0) { ++unset; unset_at = i; }
        }
        if (unset >= 2) return true;
        if (unset == 1) {
            int x = vals[(unset_at + 1) % 3], y = vals[(unset_at + 2) % 3];
            int lo = std::abs(x - y);
            int hi = std::min({level, x + y, 2 * level - x - y});
            return lo <= hi;  // lo and x+y share parity, so parity is free
        }
        return vertex_conditions_hold(vals[0], vals[1], vals[2], level);
    }

    void run(int e) {
        if (e == g.edge_count()) {
            if (++found > max_count)
                throw BudgetExceeded("weight enumeration exceeds configured cap");
            sink(labels);
            return;
        }
        const auto& [u, v] = g.edges[e];
        for (int a = 0; a <= level; ++a) {
            if (enforce_condition0 && is_bridge[e] && (a & 1)) continue;
            labels[e] = a;
            if (vertex_feasible(slots[u]) && (u == v || vertex_feasible(slots[v]))) run(e + 1);
        }
        labels[e] = -1;
    }
};

}  // namespace

std::string AdmissibilityResult::message() const {
    std::ostringstream os;
    switch (defect) {
        case WeightDefect::None: os << "admissible"; break;
        case WeightDefect::LabelOutOfRange: os << "label out of {0..k} on edge " << where; break;
        case WeightDefect::LabelCountMismatch: os << "label set does not match edge set"; break;
        case WeightDefect::BridgeParity: os << "odd label on disconnecting edge " << where; break;
        case WeightDefect::VertexParity: os << "odd label sum at vertex " << where; break;
        case WeightDefect::VertexSumBound: os << "label sum exceeds 2k at vertex " << where; break;
        case WeightDefect::Triangle: os << "triangle inequality fails at vertex " << where; break;
    }
    return os.str();
}

bool vertex_conditions_hold(int x, int y, int z, int level) {
    if (((x + y + z) & 1) != 0) return false;
    if (x + y + z > 2 * level) return false;
    return x <= y + z && y <= x + z && z <= x + y;
}

AdmissibilityResult is_admissible(const TrivalentGraph& g, const Weight& w) {
    if (w.level < 1) throw std::invalid_argument("level must be >= 1");
    AdmissibilityResult r;
    if (static_cast<int>(w.labels.size()) != g.edge_count()) {
        r.defect = WeightDefect::LabelCountMismatch;
        return r;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (w.labels[e] < 0 || w.labels[e] > w.level) {
            r.defect = WeightDefect::LabelOutOfRange;
            r.where = e;
            return r;
        }
    }
    for (int e : bridges(g)) {
        if (w.labels[e] & 1) {
            r.defect = WeightDefect::BridgeParity;
            r.where = e;
            return r;
        }
    }
    for (const auto& t : vertex_triples(g)) {
        int x = w.labels[t.edges[0]], y = w.labels[t.edges[1]], z = w.labels[t.edges[2]];
        if (((x + y + z) & 1) != 0) {
            r.defect = WeightDefect::VertexParity;
            r.where = t.vertex;
            return r;
        }
        if (x + y + z > 2 * w.level) {
            r.defect = WeightDefect::VertexSumBound;
            r.where = t.vertex;
            return r;
        }
        if (!(x <= y + z && y <= x + z && z <= x + y)) {
            r.defect = WeightDefect::Triangle;
            r.where = t.vertex;
            return r;
        }
    }
    return r;
}

static std::vector<Weight> enumerate_impl(const TrivalentGraph& g, int level, bool cond0,
                                          long long max_count) {
    require_valid(g);
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    std::vector<Weight> out;
    DfsEnumerator dfs(g, level, cond0, max_count);
    dfs.sink = [&](const std::vector<int>& labels) {
        out.push_back(Weight{level, labels});
    };
    dfs.run(0);
    return out;
}

std::vector<Weight> enumerate_weights(const TrivalentGraph& g, int level, long long max_count) {
    return enumerate_impl(g, level, true, max_count);
}

long long count_weights(const TrivalentGraph& g, int level, long long max_count) {
    require_valid(g);
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    DfsEnumerator dfs(g, level, true, max_count);
    dfs.sink = [](const std::vector<int>&) {};
    dfs.run(0);
    return dfs.found;
}

AbelianSplit abelian_filter(const TrivalentGraph& gamma0_graph, int level, long long max_count) {
    const int g = gamma0_graph.genus;
    std::vector<int> c_edges;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= g - 1; ++i) {
        int e = edge_by_name(gamma0_graph, "c" + std::to_string(i));
        if (e < 0) throw std::invalid_argument("graph lacks gamma0 edge naming");
        c_edges.push_back(e);
    }
    for (int i = 2; i <= g - 1; ++i) {
        int a = edge_by_name(gamma0_graph, "a" + std::to_string(i));
        int ap = edge_by_name(gamma0_graph, "a'" + std::to_string(i));
        if (a < 0 || ap < 0) throw std::invalid_argument("graph lacks gamma0 edge naming");
        pairs.emplace_back(a, ap);
    }
    AbelianSplit split;
    for (auto& w : enumerate_weights(gamma0_graph, level, max_count)) {
        bool ab = std::all_of(c_edges.begin(), c_edges.end(),
                              [&](int e) { return w.labels[e] == 0; }) &&
                  std::all_of(pairs.begin(), pairs.end(), [&](const std::pair<int, int>& p) {
                      return w.labels[p.first] == w.labels[p.second];
                  });
        (ab ? split.abelian : split.non_abelian).push_back(std::move(w));
    }
    return split;
}

ActionPoint weight_to_action_point(const Weight& w, Scale scale) {
    ActionPoint p;
    p.coords.reserve(w.labels.size());
    const long long den = scale == Scale::Action ? w.level : 2LL * w.level;
    for (int a : w.labels) p.coords.emplace_back(a, den);
    return p;
}

bool condition0_redundancy_check(const TrivalentGraph& g, int level, long long max_count) {
    auto with = enumerate_impl(g, level, true, max_count);
    auto without = enumerate_impl(g, level, false, max_count);
    if (with.size() != without.size()) return false;
    for (size_t i = 0; i < with.size(); ++i)
        if (with[i].labels != without[i].labels) return false;
    return true;
}

}  // namespace verlinde
