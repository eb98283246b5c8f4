#include "verlinde/rank.hpp"

#include <cinttypes>
#include <cstdint>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace verlinde {

namespace {

// One directed-rounding evaluation pass; returns false when the enclosure is
// too wide to round at the requested bound.
bool rank_enclosure(int genus, int level, int prec, long long& value, double& radius) {
    const int m = level + 2;
    const int expo = 2 * genus - 2;

    mpfr_t pi_lo, pi_hi, x_lo, x_hi, s_lo, s_hi, t_lo, t_hi, sum_lo, sum_hi, tmp;
    mpfr_inits2(prec, pi_lo, pi_hi, x_lo, x_hi, s_lo, s_hi, t_lo, t_hi, sum_lo, sum_hi, tmp,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_set_zero(sum_lo, 1);
    mpfr_set_zero(sum_hi, 1);

    // half_pi bounds for the monotonicity split of sin on (0, pi)
    mpfr_t half_pi_lo, half_pi_hi;
    mpfr_inits2(prec, half_pi_lo, half_pi_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_div_ui(half_pi_lo, pi_lo, 2, MPFR_RNDD);
    mpfr_div_ui(half_pi_hi, pi_hi, 2, MPFR_RNDU);

    for (int n = 1; n <= level + 1; ++n) {
        mpfr_mul_ui(x_lo, pi_lo, n, MPFR_RNDD);
        mpfr_div_ui(x_lo, x_lo, m, MPFR_RNDD);
        mpfr_mul_ui(x_hi, pi_hi, n, MPFR_RNDU);
        mpfr_div_ui(x_hi, x_hi, m, MPFR_RNDU);

        // sin over [x_lo, x_hi] subset (0, pi)
        mpfr_sin(s_lo, x_lo, MPFR_RNDD);
        mpfr_sin(tmp, x_hi, MPFR_RNDD);
        if (mpfr_cmp(tmp, s_lo) < 0) mpfr_set(s_lo, tmp, MPFR_RNDD);
        mpfr_sin(s_hi, x_lo, MPFR_RNDU);
        mpfr_sin(tmp, x_hi, MPFR_RNDU);
        if (mpfr_cmp(tmp, s_hi) > 0) mpfr_set(s_hi, tmp, MPFR_RNDU);
        if (mpfr_cmp(x_lo, half_pi_hi) <= 0 && mpfr_cmp(x_hi, half_pi_lo) >= 0)
            mpfr_set_ui(s_hi, 1, MPFR_RNDU);

        if (mpfr_sgn(s_lo) <= 0) {  // cannot certify positivity at this precision
            mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, s_lo, s_hi, t_lo, t_hi, sum_lo, sum_hi, tmp,
                        half_pi_lo, half_pi_hi, static_cast<mpfr_ptr>(nullptr));
            return false;
        }

        // s^{-expo} is decreasing in s
        mpfr_pow_si(t_lo, s_hi, -expo, MPFR_RNDD);
        mpfr_pow_si(t_hi, s_lo, -expo, MPFR_RNDU);
        mpfr_add(sum_lo, sum_lo, t_lo, MPFR_RNDD);
        mpfr_add(sum_hi, sum_hi, t_hi, MPFR_RNDU);
    }

    // prefactor (m/2)^{g-1}; m/2 is exact in binary
    mpfr_t pre, total_lo, total_hi;
    mpfr_inits2(prec, pre, total_lo, total_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(pre, m, MPFR_RNDN);
    mpfr_div_ui(pre, pre, 2, MPFR_RNDN);
    mpfr_pow_ui(total_lo, pre, genus - 1, MPFR_RNDD);
    mpfr_mul(total_lo, total_lo, sum_lo, MPFR_RNDD);
    mpfr_pow_ui(total_hi, pre, genus - 1, MPFR_RNDU);
    mpfr_mul(total_hi, total_hi, sum_hi, MPFR_RNDU);

    mpfr_t mid;
    mpfr_init2(mid, prec);
    mpfr_add(mid, total_lo, total_hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    mpfr_round(tmp, mid);
    long long nearest = mpfr_get_si(tmp, MPFR_RNDN);

    // radius = max(|total_hi - nearest|, |nearest - total_lo|), outward
    mpfr_t r1, r2;
    mpfr_inits2(prec, r1, r2, static_cast<mpfr_ptr>(nullptr));
    mpfr_sub_si(r1, total_hi, static_cast<long>(nearest), MPFR_RNDU);
    mpfr_sub_si(r2, total_lo, static_cast<long>(nearest), MPFR_RNDD);
    mpfr_abs(r2, r2, MPFR_RNDU);
    if (mpfr_cmp(r2, r1) > 0) mpfr_set(r1, r2, MPFR_RNDU);
    double rad = mpfr_get_d(r1, MPFR_RNDU);

    mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, s_lo, s_hi, t_lo, t_hi, sum_lo, sum_hi, tmp,
                half_pi_lo, half_pi_hi, pre, total_lo, total_hi, mid, r1, r2,
                static_cast<mpfr_ptr>(nullptr));

    value = nearest;
    radius = rad;
    return true;
}

}  // namespace

RankValue verlinde_rank(int genus, int level, int precision_bits) {
    if (genus < 2) throw std::invalid_argument("verlinde_rank requires genus >= 2");
    if (level < 1) throw std::invalid_argument("verlinde_rank requires level >= 1");
    if (precision_bits < 32) precision_bits = 32;

    int prec = precision_bits;
    for (int attempt = 0; attempt < 5; ++attempt, prec *= 2) {
        long long value = 0;
        double radius = std::numeric_limits<double>::infinity();
        if (rank_enclosure(genus, level, prec, value, radius) && radius < kRankRadiusBound)
            return RankValue{value, radius, prec};
    }
    throw PrecisionError("rank sum could not be rounded within the certified radius bound");
}

namespace {

struct Factor {
    std::vector<int> vars;        // sorted edge ids
    std::vector<long long> data;  // mixed-radix table, last var fastest

    static size_t table_size(size_t nvars, int domain) {
        size_t s = 1;
        for (size_t i = 0; i < nvars; ++i) s *= domain;
        return s;
    }
};

long long index_of(const std::vector<int>& vars, const std::vector<int>& assign, int domain) {
    long long idx = 0;
    for (int v : vars) idx = idx * domain + assign[v];
    return idx;
}

Factor multiply(const Factor& a, const Factor& b, int domain, long long max_table) {
    Factor out;
    out.vars = a.vars;
    for (int v : b.vars)
        if (!std::binary_search(out.vars.begin(), out.vars.end(), v)) out.vars.push_back(v);
    std::sort(out.vars.begin(), out.vars.end());

    size_t size = Factor::table_size(out.vars.size(), domain);
    if (size > static_cast<size_t>(max_table))
        throw BudgetExceeded("contraction width exceeds configured memory bound");
    out.data.assign(size, 0);

    std::vector<int> assign(out.vars.empty() ? 0 : out.vars.back() + 1, 0);
    std::vector<int> odo(out.vars.size(), 0);
    for (size_t flat = 0; flat < size; ++flat) {
        for (size_t i = 0; i < out.vars.size(); ++i) assign[out.vars[i]] = odo[i];
        out.data[flat] = a.data[index_of(a.vars, assign, domain)] *
                         b.data[index_of(b.vars, assign, domain)];
        for (int i = static_cast<int>(odo.size()) - 1; i >= 0; --i) {
            if (++odo[i] < domain) break;
            odo[i] = 0;
        }
    }
    return out;
}

Factor sum_out(const Factor& f, int var, int domain) {
    Factor out;
    out.vars.reserve(f.vars.size() - 1);
    for (int v : f.vars)
        if (v != var) out.vars.push_back(v);
    size_t size = Factor::table_size(out.vars.size(), domain);
    out.data.assign(size, 0);

    int max_var = f.vars.back();
    std::vector<int> assign(max_var + 1, 0);
    std::vector<int> odo(f.vars.size(), 0);
    size_t in_size = f.data.size();
    for (size_t flat = 0; flat < in_size; ++flat) {
        for (size_t i = 0; i < f.vars.size(); ++i) assign[f.vars[i]] = odo[i];
        out.data[index_of(out.vars, assign, domain)] += f.data[flat];
        for (int i = static_cast<int>(odo.size()) - 1; i >= 0; --i) {
            if (++odo[i] < domain) break;
            odo[i] = 0;
        }
    }
    return out;
}

}  // namespace

long long fusion_count_contraction(const TrivalentGraph& g, int level, long long max_table) {
    require_valid(g);
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    const int domain = level + 1;

    // one 0/1 factor per vertex over its distinct incident edges
    std::vector<Factor> factors;
    for (const auto& t : vertex_triples(g)) {
        Factor f;
        f.vars.assign(t.edges.begin(), t.edges.end());
        f.vars.erase(std::unique(f.vars.begin(), f.vars.end()), f.vars.end());
        size_t size = Factor::table_size(f.vars.size(), domain);
        f.data.assign(size, 0);
        std::vector<int> assign(f.vars.back() + 1, 0);
        std::vector<int> odo(f.vars.size(), 0);
        for (size_t flat = 0; flat < size; ++flat) {
            for (size_t i = 0; i < f.vars.size(); ++i) assign[f.vars[i]] = odo[i];
            int x = assign[t.edges[0]], y = assign[t.edges[1]], z = assign[t.edges[2]];
            f.data[flat] = vertex_conditions_hold(x, y, z, level) ? 1 : 0;
            for (int i = static_cast<int>(odo.size()) - 1; i >= 0; --i) {
                if (++odo[i] < domain) break;
                odo[i] = 0;
            }
        }
        factors.push_back(std::move(f));
    }

    std::set<int> remaining;
    for (int e = 0; e < g.edge_count(); ++e) remaining.insert(e);

    while (!remaining.empty()) {
        // greedy: eliminate the variable whose combined factor has the
        // fewest surviving variables; ties go to the smallest edge id
        int best_var = -1;
        size_t best_width = std::numeric_limits<size_t>::max();
        for (int v : remaining) {
            std::set<int> joined;
            for (const auto& f : factors)
                if (std::binary_search(f.vars.begin(), f.vars.end(), v))
                    joined.insert(f.vars.begin(), f.vars.end());
            size_t width = joined.size() - 1;
            if (width < best_width) {
                best_width = width;
                best_var = v;
            }
        }

        std::vector<Factor> touching, rest;
        for (auto& f : factors) {
            if (std::binary_search(f.vars.begin(), f.vars.end(), best_var))
                touching.push_back(std::move(f));
            else
                rest.push_back(std::move(f));
        }
        Factor merged = std::move(touching.front());
        for (size_t i = 1; i < touching.size(); ++i)
            merged = multiply(merged, touching[i], domain, max_table);
        rest.push_back(sum_out(merged, best_var, domain));
        factors = std::move(rest);
        remaining.erase(best_var);
    }

    long long total = 1;
    for (const auto& f : factors) total *= f.data.at(0);
    return total;
}

std::vector<std::pair<CanonicalCertificate, long long>> contraction_by_class(
    int genus, int level, int max_genus, long long max_table) {
    std::vector<std::pair<CanonicalCertificate, long long>> out;
    for (const auto& g : enumerate_trivalent_graphs(genus, max_genus))
        out.emplace_back(canonical_certificate(g), fusion_count_contraction(g, level, max_table));
    return out;
}

CountReport verify_rank_identity(int genus, int level, long long enum_budget, int max_genus,
                                 long long max_table) {
    CountReport rep;
    rep.genus = genus;
    rep.level = level;

    auto rank = verlinde_rank(genus, level);
    rep.count_formula = rank.value;
    rep.formula_radius = rank.radius;

    auto classes = enumerate_trivalent_graphs(genus, max_genus);
    bool all_equal = true;
    bool first = true;

    // feasibility gate on the raw label space, conservative and deterministic
    double label_space = std::pow(static_cast<double>(level + 1), 3 * genus - 3);
    bool enumerate = label_space <= static_cast<double>(enum_budget);

    for (const auto& g : classes) {
        long long c = fusion_count_contraction(g, level, max_table);
        if (first) {
            rep.count_contraction = c;
            first = false;
        } else if (c != rep.count_contraction) {
            all_equal = false;
        }
        if (enumerate) {
            long long n = count_weights(g, level, enum_budget);
            if (!rep.count_enumeration) rep.count_enumeration = n;
            if (n != *rep.count_enumeration || n != c) all_equal = false;
        }
    }
    rep.agreement = all_equal && rep.count_contraction == rep.count_formula &&
                    (!rep.count_enumeration || *rep.count_enumeration == rep.count_formula);
    return rep;
}

}  // namespace verlinde
