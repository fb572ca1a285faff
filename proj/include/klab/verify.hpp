#pragma once

#include "homology.hpp"
#include "parallel.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace klab {

// ---------------------------------------------------------------------------
// parameter grids

// labels with |lambda| <= max_size admissible for the pair (sum |lambda_i| for GL)
inline std::vector<label> labels_up_to(const dual_pair& p, int max_size) {
    std::vector<label> out;
    if (p.kind == pair_kind::a) {
        for (const auto& g : generalized_partitions_up_to(max_size, p.ell)) out.push_back(g.parts());
        return out;
    }
    for (const auto& la : partitions_up_to(max_size)) {
        bool ok = p.kind == pair_kind::d_even || p.kind == pair_kind::d_odd ? in_orthogonal_range(la, p.size())
                                                                          : la.length() <= p.ell;
        if (ok) out.push_back(la.parts());
    }
    return out;
}

// generalized partitions of length ell with every |lambda_i| <= bound
inline std::vector<label> bounded_gl_labels(int ell, int bound) {
    std::vector<label> out;
    for (const auto& g : generalized_partitions_up_to(ell * bound, ell))
        if (g.part(1) <= bound && g.part(ell) >= -bound) out.push_back(g.parts());
    return out;
}

// a, b, c with ell = 1, 2 and O(m) with m = 2..5
inline std::vector<dual_pair> standard_pairs(side s) {
    std::vector<dual_pair> out;
    for (lie_type t : {lie_type::a, lie_type::b, lie_type::c})
        for (int ell : {1, 2}) out.push_back(dual_pair::for_type(s, t, ell));
    for (int m = 2; m <= 5; ++m) out.push_back(dual_pair::for_type(s, lie_type::d, m));
    return out;
}

inline character_report merge_reports(const std::string& identity, nlohmann::ordered_json params,
                                      const std::vector<character_report>& parts) {
    character_report r;
    r.identity = identity;
    r.params = std::move(params);
    r.pass = true;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& p : parts) {
        if (p.pass) continue;
        if (r.pass && p.first) r.first = p.first;
        r.pass = false;
        failures.push_back(to_json(p));
    }
    r.extra["checks"] = parts.size();
    if (!failures.empty()) r.extra["failures"] = failures;
    return r;
}

// ---------------------------------------------------------------------------
// partition identities

// {l'_i - i + 1 > 0} together with {i - l_i : i <= N, l_i < i} is {1, ..., N}
inline bool aux111_holds(const partition& la, int N) {
    std::map<int, int> counts;
    for (int i = 1; i <= la.part(1) + 1; ++i) {
        int v = la.column(i) - i + 1;
        if (v > 0) ++counts[v];
    }
    for (int i = 1; i <= N; ++i)
        if (la.part(i) - i < 0) ++counts[i - la.part(i)];
    std::map<int, int> expected;
    for (int i = 1; i <= N; ++i) expected[i] = 1;
    return counts == expected;
}

inline character_report verify_theta_forms(int max_size, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = "theta-forms";
    r.params = {{"max_size", max_size}};
    r.pass = true;
    const auto all = partitions_up_to(max_size);
    std::map<half_sequence, partition> seen1, seen2;
    auto fail = [&](const std::string& what, const partition& la) {
        if (!r.pass) return;
        r.pass = false;
        r.extra["failure"] = what + " at (" + la.str() + ")";
    };
    for (const auto& la : all) {
        const auto a = theta1(la);
        const auto b = theta2(la);
        if (form1(la) != form_s(a, a)) fail("form1 vs theta1", la);
        if (form2(la) != form_s(b, b)) fail("form2 vs theta2", la);
        if (!in_sp1(a)) fail("theta1 image outside SP1", la);
        if (!in_sp2(b)) fail("theta2 image outside SP2", la);
        if (!seen1.emplace(a, la).second) fail("theta1 not injective", la);
        if (!seen2.emplace(b, la).second) fail("theta2 not injective", la);
    }
    r.extra["partitions"] = all.size();
    if (timing) r.timing_ms = clock.ms();
    return r;
}

inline character_report verify_conjugation_forms(int max_size, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = "conjugation-forms";
    r.params = {{"max_size", max_size}};
    r.pass = true;
    const auto all = partitions_up_to(max_size);
    for (const auto& la : all) {
        const partition lc = la.conjugate();
        const long n = la.size();
        if (form1(la) != -form1(lc) - 2 * n || form2(la) != -form2(lc) + 2 * n) {
            r.pass = false;
            r.extra["failure"] = "(" + la.str() + ")";
            break;
        }
    }
    r.extra["partitions"] = all.size();
    if (timing) r.timing_ms = clock.ms();
    return r;
}

inline character_report verify_aux111(int max_size, int extra_vars, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = "column-row-complement";
    r.params = {{"max_size", max_size}, {"extra_vars", extra_vars}};
    r.pass = true;
    long checks = 0;
    for (const auto& la : partitions_up_to(max_size)) {
        for (int N = la.column(1); N <= la.column(1) + extra_vars; ++N) {
            ++checks;
            if (!aux111_holds(la, N)) {
                r.pass = false;
                r.extra["failure"] = "(" + la.str() + "), N = " + std::to_string(N);
                break;
            }
        }
        if (!r.pass) break;
    }
    r.extra["checks"] = checks;
    if (timing) r.timing_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// symmetric function identities

inline character_report verify_hook_duality(int max_size, int nvars, bool timing = false, int threads = 1) {
    stopwatch clock;
    const truncation t{nvars, max_size};
    const auto xs = alphabets::int_pos(nvars);
    const auto ys = alphabets::half_pos(nvars);
    const auto shapes = partitions_up_to(max_size);
    auto parts = parallel_map(shapes.size(), threads, [&](std::size_t i) {
        character_report p;
        p.identity = "hook-duality";
        p.params = {{"lambda", shapes[i].str()}};
        compare_into(p, hook_schur(shapes[i].conjugate(), xs, ys, t), hook_schur(shapes[i], ys, xs, t));
        return p;
    });
    auto r = merge_reports("hook-duality", {{"max_size", max_size}, {"vars", nvars}}, parts);
    if (timing) r.timing_ms = clock.ms();
    return r;
}

// prod (1 + x_n z_i) / prod (1 - x_r z_i) = sum_lambda HS_{lambda'}(x_1, x_2, ...; x_{1/2}, x_{3/2}, ...) s_lambda(z)
inline character_report verify_super_cauchy(int ell, truncation t, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = "super-cauchy";
    r.params = {{"ell", ell}, {"vars", t.vars}, {"depth", t.depth}};
    series lhs = series::constant(1, t);
    for (int i = 1; i <= ell; ++i)
        for (int n = 1; n <= t.vars; ++n) {
            lhs.mul_binomial(monomial::x(n) * monomial::z(i), +1);
            lhs.mul_geometric(monomial::x(half_int::from_twice(2 * n - 1)) * monomial::z(i), +1);
        }
    series rhs(t);
    for (const auto& la : partitions_up_to(t.depth, ell)) {
        series hs = hook_schur(la.conjugate(), alphabets::int_pos(t.vars), alphabets::half_pos(t.vars), t);
        if (hs.is_zero()) continue;
        rhs += hs * gl_character(generalized_partition::pad(la, ell)).to_series();
    }
    compare_into(r, lhs, rhs);
    if (timing) r.timing_ms = clock.ms();
    return r;
}

// prod (1 + x_n y_i) = sum_lambda s_lambda(x) s_lambda'(y), both alphabets inside the x-window
inline character_report verify_dual_cauchy(truncation t) {
    character_report r;
    r.identity = "dual-cauchy";
    r.params = {{"vars", t.vars}, {"depth", t.depth}};
    const auto xs = alphabets::int_pos(t.vars);
    const auto ys = alphabets::half_pos(t.vars);
    series lhs = series::constant(1, t);
    for (const auto& x : xs)
        for (const auto& y : ys) lhs.mul_binomial(x * y, +1);
    series rhs(t);
    for (const auto& la : partitions_up_to(t.depth / 2)) rhs += schur(la, xs, t) * schur(la.conjugate(), ys, t);
    compare_into(r, lhs, rhs);
    return r;
}

// ---------------------------------------------------------------------------
// weights

// random mu in the dominant set: partition blocks with entries <= max_coord, vacuum coefficient in [-max_level, max_level]
inline weight random_dominant_weight(lie_type t, std::mt19937_64& rng, int max_coord = 10, int max_level = 5) {
    std::uniform_int_distribution<int> len(0, 6), val(1, max_coord), lev(-max_level, max_level);
    auto block = [&] {
        std::vector<int> v(len(rng));
        for (auto& x : v) x = val(rng);
        std::sort(v.rbegin(), v.rend());
        return v;
    };
    const algebra_id alg = classical_of(t);
    weight mu(alg, rational(lev(rng)) * vacuum_level(alg));
    auto plus = block();
    for (std::size_t i = 0; i < plus.size(); ++i) mu.set(static_cast<int>(i) + 1, plus[i]);
    if (t == lie_type::a) {
        auto minus = block();
        for (std::size_t i = 0; i < minus.size(); ++i) mu.set(-static_cast<int>(i), -minus[i]);
    }
    return mu;
}

inline character_report verify_casimir_transfer(std::uint64_t seed, int samples, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = "casimir-transfer";
    r.params = {{"seed", seed}, {"samples_per_type", samples}};
    r.pass = true;
    std::mt19937_64 rng(seed);
    long checks = 0;
    for (lie_type t : {lie_type::a, lie_type::b, lie_type::c, lie_type::d}) {
        for (int i = 0; i < samples; ++i) {
            const weight mu = random_dominant_weight(t, rng);
            ++checks;
            if (casimir_c(mu) != casimir_s(theta(mu)) && r.pass) {
                r.pass = false;
                r.extra["failure"] = mu.str();
            }
        }
    }
    r.extra["checks"] = checks;
    if (timing) r.timing_ms = clock.ms();
    return r;
}

// theta(Lambda(lambda)) = Lambdabar(lambda) over the standard pairs
inline character_report verify_theta_highest_weights(int max_size) {
    character_report r;
    r.identity = "theta-highest-weights";
    r.params = {{"max_size", max_size}};
    r.pass = true;
    long checks = 0;
    for (const auto& p : standard_pairs(side::classical)) {
        for (const auto& lab : labels_up_to(p, max_size)) {
            ++checks;
            if (theta(classical_highest_weight(p, lab)) != super_highest_weight(p, lab) && r.pass) {
                r.pass = false;
                r.extra["failure"] = p.name() + " " + std::to_string(p.size()) + " (" + label_str(lab) + ")";
            }
        }
    }
    r.extra["checks"] = checks;
    return r;
}

// ---------------------------------------------------------------------------
// grids over the dual pairs

struct grid_options {
    int max_size = 3;
    int vars = 4;
    int depth = 4;
    int k_max = 4;
    int threads = 1;
    bool timing = false;
};

inline character_report verify_casimir_grid(const grid_options& g) {
    stopwatch clock;
    std::vector<std::pair<dual_pair, label>> jobs;
    for (const auto& p : standard_pairs(side::classical))
        for (const auto& lab : labels_up_to(p, g.max_size)) jobs.emplace_back(p, lab);
    auto parts = parallel_map(jobs.size(), g.threads,
                              [&](std::size_t i) { return verify_casimir(jobs[i].first, jobs[i].second, g.k_max); });
    auto r = merge_reports("casimir-grid", {{"max_size", g.max_size}, {"k_max", g.k_max}}, parts);
    if (g.timing) r.timing_ms = clock.ms();
    return r;
}

inline character_report verify_ep_grid(side s, const grid_options& g) {
    stopwatch clock;
    const truncation t{g.vars, g.depth};
    std::vector<std::pair<dual_pair, label>> jobs;
    if (s == side::negative) {
        for (int ell : {1, 2})
            for (const auto& lab : bounded_gl_labels(ell, 2))
                jobs.emplace_back(dual_pair::for_type(side::negative, lie_type::a, ell), lab);
    } else {
        for (const auto& p : standard_pairs(s))
            for (const auto& lab : labels_up_to(p, g.max_size)) jobs.emplace_back(p, lab);
    }
    // decompositions first, one per pair, so that workers share them
    std::vector<dual_pair> pairs;
    for (const auto& [p, lab] : jobs)
        if (pairs.empty() || pairs.back().name() != p.name() || pairs.back().ell != p.ell) pairs.push_back(p);
    parallel_map(pairs.size(), g.threads, [&](std::size_t i) { return cached_decomposition(pairs[i], t).entries.size(); });
    auto parts = parallel_map(jobs.size(), g.threads,
                              [&](std::size_t i) { return verify_euler_poincare(jobs[i].first, jobs[i].second, t); });
    std::string id = s == side::classical ? "euler-poincare-classical"
                     : s == side::super   ? "euler-poincare-super"
                                          : "euler-poincare-negative";
    nlohmann::ordered_json params = {{"vars", g.vars}, {"depth", g.depth}};
    if (s == side::negative) params["max_abs_part"] = 2;
    else params["max_size"] = g.max_size;
    auto r = merge_reports(id, params, parts);
    if (g.timing) r.timing_ms = clock.ms();
    return r;
}

// resolution checks: type a super with ell = 1, |lambda| <= 2, and the negative-level counterpart
inline character_report verify_resolution_grid(truncation t, int threads = 1, bool timing = false) {
    stopwatch clock;
    std::vector<std::pair<dual_pair, label>> jobs;
    for (const auto& lab : labels_up_to(dual_pair::for_type(side::super, lie_type::a, 1), 2))
        jobs.emplace_back(dual_pair::for_type(side::super, lie_type::a, 1), lab);
    for (const auto& lab : bounded_gl_labels(1, 2))
        jobs.emplace_back(dual_pair::for_type(side::negative, lie_type::a, 1), lab);
    auto parts = parallel_map(jobs.size(), threads,
                              [&](std::size_t i) { return verify_resolution(jobs[i].first, jobs[i].second, t); });
    auto r = merge_reports("resolution-grid", {{"vars", t.vars}, {"depth", t.depth}}, parts);
    if (timing) r.timing_ms = clock.ms();
    return r;
}

}  // namespace klab
