#include "verlinde/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

std::vector<int> degrees(const TrivalentGraph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (const auto& [u, v] : g.edges) {
        deg[u] += (u == v) ? 2 : 1;
        if (u != v) deg[v] += 1;
    }
    return deg;
}

bool connected(const TrivalentGraph& g) {
    if (g.vertex_count == 0) return false;
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges) {
            if (a == u && !seen[b]) { seen[b] = 1; stack.push_back(b); }
            if (b == u && !seen[a]) { seen[a] = 1; stack.push_back(a); }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Adjacency multiplicity matrix; diagonal holds the loop count.
std::vector<std::vector<int>> multiplicity_matrix(const TrivalentGraph& g) {
    std::vector<std::vector<int>> a(g.vertex_count, std::vector<int>(g.vertex_count, 0));
    for (const auto& [u, v] : g.edges) {
        if (u == v) {
            a[u][u] += 1;
        } else {
            a[u][v] += 1;
            a[v][u] += 1;
        }
    }
    return a;
}

// Finds the lexicographically minimal column-growth encoding over all vertex
// orderings: step t contributes A[p0][pt], ..., A[p_{t-1}][pt], A[pt][pt].
// Branch and bound over permutation prefixes.
std::vector<int> minimal_encoding(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> best;
    std::vector<int> perm, cur;
    std::vector<char> used(n, 0);
    perm.reserve(n);
    cur.reserve(n * (n + 1) / 2);

    std::function<void(int)> dfs = [&](int t) {
        if (t == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            size_t mark = cur.size();
            for (int i = 0; i < t; ++i) cur.push_back(a[perm[i]][v]);
            cur.push_back(a[v][v]);
            // prune iff the prefix already exceeds the current best
            bool worse = false;
            if (!best.empty()) {
                for (size_t i = 0; i < cur.size(); ++i) {
                    if (cur[i] != best[i]) {
                        worse = cur[i] > best[i];
                        break;
                    }
                }
            }
            if (!worse) {
                used[v] = 1;
                perm.push_back(v);
                dfs(t + 1);
                perm.pop_back();
                used[v] = 0;
            }
            cur.resize(mark);
        }
    };
    dfs(0);
    return best;
}

TrivalentGraph graph_from_encoding(int n, const std::vector<int>& enc) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    size_t pos = 0;
    for (int t = 0; t < n; ++t) {
        for (int i = 0; i < t; ++i) {
            a[i][t] = a[t][i] = enc[pos++];
        }
        a[t][t] = enc[pos++];
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int m = 0; m < a[u][u]; ++m) edges.emplace_back(u, u);
        for (int v = u + 1; v < n; ++v) {
            for (int m = 0; m < a[u][v]; ++m) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, std::move(edges));
}

}  // namespace

TrivalentGraph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    TrivalentGraph g;
    g.vertex_count = vertex_count;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    g.edges = std::move(edges);
    g.genus = g.betti_number();
    return g;
}

ValidationResult validate(const TrivalentGraph& g) {
    ValidationResult r;
    auto deg = degrees(g);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (deg[v] != 3) {
            r.defect = GraphDefect::DegreeViolation;
            r.where = v;
            std::ostringstream os;
            os << "vertex " << v << " has degree " << deg[v] << ", expected 3";
            r.message = os.str();
            return r;
        }
    }
    if (!connected(g)) {
        r.defect = GraphDefect::Disconnected;
        r.message = "graph is not connected";
        return r;
    }
    const int b1 = g.betti_number();
    if (g.genus < 2 || b1 != g.genus || g.vertex_count != 2 * g.genus - 2 ||
        g.edge_count() != 3 * g.genus - 3) {
        r.defect = GraphDefect::WrongCounts;
        std::ostringstream os;
        os << "counts inconsistent with genus " << g.genus << ": vertices=" << g.vertex_count
           << " edges=" << g.edge_count() << " betti=" << b1;
        r.message = os.str();
        return r;
    }
    return r;
}

void require_valid(const TrivalentGraph& g) {
    auto r = validate(g);
    if (!r.ok()) throw std::invalid_argument("invalid trivalent graph: " + r.message);
}

std::vector<VertexTriple> vertex_triples(const TrivalentGraph& g) {
    std::vector<std::vector<int>> inc(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges[e];
        inc[u].push_back(e);
        if (u == v) inc[u].push_back(e);
        else inc[v].push_back(e);
    }
    std::vector<VertexTriple> out(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (inc[v].size() != 3)
            throw std::invalid_argument("vertex_triples requires a validated trivalent graph");
        std::sort(inc[v].begin(), inc[v].end());
        out[v].vertex = v;
        std::copy(inc[v].begin(), inc[v].end(), out[v].edges.begin());
    }
    return out;
}

std::vector<int> bridges(const TrivalentGraph& g) {
    // Tarjan lowlink search; parallel edges are distinguished by edge id, so
    // a doubled edge correctly fails the bridge test.
    const int n = g.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges[e];
        if (u == v) continue;  // loops never disconnect
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int in_edge) {
        disc[u] = low[u] = timer++;
        for (const auto& [v, e] : adj[u]) {
            if (e == in_edge) continue;
            if (disc[v] == -1) {
                dfs(v, e);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) out.push_back(e);
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

std::string CanonicalCertificate::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 0xf]);
    }
    return s;
}

CanonicalCertificate canonical_certificate(const TrivalentGraph& g) {
    auto enc = minimal_encoding(multiplicity_matrix(g));
    CanonicalCertificate cert;
    cert.bytes.push_back(static_cast<char>(g.vertex_count));
    for (int x : enc) cert.bytes.push_back(static_cast<char>(x));
    return cert;
}

TrivalentGraph canonical_form(const TrivalentGraph& g) {
    auto enc = minimal_encoding(multiplicity_matrix(g));
    return graph_from_encoding(g.vertex_count, enc);
}

std::vector<TrivalentGraph> enumerate_trivalent_graphs(int genus, int max_genus) {
    if (genus < 2 || genus > max_genus)
        throw std::invalid_argument("genus out of supported enumeration range");
    const int n = 2 * genus - 2;
    const int m = 3 * genus - 3;

    std::map<CanonicalCertificate, TrivalentGraph> classes;
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);

    // Edges are produced in nondecreasing (u,v) order, so the first endpoint
    // of the next edge is forced to be the smallest deficient vertex.
    std::function<void()> extend = [&]() {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < 3) { u = v; break; }
        if (u == -1) {
            TrivalentGraph g = make_graph(n, edges);
            if (!connected(g)) return;
            auto cert = canonical_certificate(g);
            classes.emplace(std::move(cert), canonical_form(g));
            return;
        }
        if (static_cast<int>(edges.size()) == m) return;
        int v_min = u;
        if (!edges.empty() && edges.back().first == u) v_min = edges.back().second;
        for (int v = v_min; v < n; ++v) {
            if (v == u) {
                if (deg[u] > 1) continue;
                deg[u] += 2;
                edges.emplace_back(u, u);
                extend();
                edges.pop_back();
                deg[u] -= 2;
            } else {
                if (deg[v] >= 3) continue;
                ++deg[u];
                ++deg[v];
                edges.emplace_back(u, v);
                extend();
                edges.pop_back();
                --deg[u];
                --deg[v];
            }
        }
    };
    extend();

    std::vector<TrivalentGraph> out;
    out.reserve(classes.size());
    for (auto& [cert, g] : classes) out.push_back(std::move(g));
    return out;
}

TrivalentGraph gamma0(int genus) {
    if (genus < 2) throw std::invalid_argument("gamma0 requires genus >= 2");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    auto add = [&](int u, int v, std::string name) {
        edges.emplace_back(u, v);
        names.push_back(std::move(name));
    };
    add(0, 0, "a1");
    add(0, 1, "c1");
    int cur = 1;
    for (int i = 2; i <= genus - 1; ++i) {
        add(cur, cur + 1, "a" + std::to_string(i));
        add(cur, cur + 1, "a'" + std::to_string(i));
        add(cur + 1, cur + 2, "c" + std::to_string(i));
        cur += 2;
    }
    add(cur, cur, "a" + std::to_string(genus));
    TrivalentGraph g = make_graph(cur + 1, std::move(edges));
    g.edge_names = std::move(names);
    require_valid(g);
    return g;
}

int edge_by_name(const TrivalentGraph& g, const std::string& name) {
    for (size_t i = 0; i < g.edge_names.size(); ++i)
        if (g.edge_names[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace verlinde
