#pragma once

#include "fock.hpp"
#include "symring.hpp"
#include "weights.hpp"
#include "weyl.hpp"

#include <json.hpp>

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klab {

// Highest weight label: a generalized partition for GL, a partition otherwise (stored as its parts).
using label = std::vector<int>;

inline std::string label_str(const label& l) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(l[i]);
    }
    return s;
}

// Coefficients of the group characters in the Fock space character.
// For O(2 ell) the entry at lambda (length <= ell) is ch L(lambda) + ch L(tilde lambda) when they differ,
// and ch L(lambda) when lambda = tilde lambda.
struct character_table {
    dual_pair pair;
    truncation trunc;
    std::map<label, series> entries;
};

namespace detail {

inline laurent::key z_key(const monomial& m, int ell) {
    laurent::key k(ell + 1, 0);
    for (const auto& en : m.entries()) {
        variable v = variable::unpack(en.var);
        if (v.kind == alphabet::z) k.at(v.index.as_int() - 1) = en.exp;
        else if (v.kind == alphabet::eps) k[ell] = en.exp;
    }
    return k;
}

inline bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

}  // namespace detail

// Peels off group characters by their leading z-monomial.
inline character_table decompose(const dual_pair& p, truncation t) {
    const int ell = p.ell;
    const group_kind g = p.group();
    std::map<laurent::key, series> F;
    const series fock = fock_char(p, t);
    for (const auto& [m, c] : fock.terms()) {
        auto k = detail::z_key(m.non_x_part(), ell);
        F.try_emplace(k, series(t)).first->second.add_term(m.x_part(), c);
    }
    character_table table{p, t, {}};
    std::map<partition, laurent> char_cache;
    while (!F.empty()) {
        auto lead = F.begin();
        for (auto it = F.begin(); it != F.end(); ++it)
            if (laurent::order_less(lead->first, it->first)) lead = it;
        const laurent::key k = lead->first;
        const series coeff = lead->second;
        std::vector<int> mu(ell);
        const int offset = g == group_kind::pin ? 1 : 0;
        for (int i = 0; i < ell; ++i) {
            if ((k[i] - offset) % 2 != 0) throw std::logic_error("decompose: unexpected half-integral exponent");
            mu[i] = (k[i] - offset) / 2;
        }
        if (!detail::weakly_decreasing(mu) || (g != group_kind::gl && mu.back() < 0))
            throw std::logic_error("decompose: leading exponent is not dominant");
        laurent ch;
        label lab;
        if (g == group_kind::gl) {
            generalized_partition la(mu);
            ch = gl_character(la);
            lab = mu;
        } else {
            partition la(mu);
            if (g == group_kind::o_odd && la.size() % 2 != k[ell]) la = tilde(la, p.size());
            auto it = char_cache.find(la);
            if (it == char_cache.end()) it = char_cache.emplace(la, group_character(g, la, p.size())).first;
            ch = it->second;
            lab = la.parts();
        }
        if (table.entries.count(lab)) throw std::logic_error("decompose: label seen twice");
        for (const auto& [kk, c] : ch.terms()) {
            auto it = F.find(kk);
            series delta = coeff;
            delta.scale(c);
            if (it == F.end()) {
                F.emplace(kk, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) F.erase(it);
            }
        }
        table.entries.emplace(lab, coeff);
    }
    return table;
}

inline const character_table& cached_decomposition(const dual_pair& p, truncation t) {
    static std::map<std::tuple<int, int, int, int, int>, character_table> cache;
    static std::mutex mtx;
    const auto key = std::make_tuple(static_cast<int>(p.s), static_cast<int>(p.kind), p.ell, t.vars, t.depth);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    character_table table = decompose(p, t);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(table)).first->second;
}

// The module with highest weight indexed by lambda.  For O(2 ell) this is the sum over {lambda, tilde lambda}
// (twice ch L(lambda) when they coincide).
inline series irr_char_via_duality(const dual_pair& p, const label& lambda, truncation t) {
    const character_table& table = cached_decomposition(p, t);
    label key = lambda;
    integer mult = 1;
    if (p.kind == pair_kind::d_even) {
        partition la(lambda);
        if (la.length() > p.ell) la = tilde(la, p.size());
        if (la.length() == p.ell) mult = 2;
        key = la.parts();
    }
    if (p.kind != pair_kind::a) {
        while (!key.empty() && key.back() == 0) key.pop_back();
    }
    auto it = table.entries.find(key);
    if (it == table.entries.end()) return series(t);
    series s = it->second;
    return s.scale(mult);
}

// ---------------------------------------------------------------------------

inline weight classical_highest_weight(const dual_pair& p, const label& lambda) {
    if (p.kind == pair_kind::a) return classical_hw_a(generalized_partition(lambda));
    return classical_hw(p.type(), partition(lambda), p.size());
}

inline weight super_highest_weight(const dual_pair& p, const label& lambda) {
    if (p.kind == pair_kind::a) return super_hw_a(generalized_partition(lambda));
    return super_hw(p.type(), partition(lambda), p.size());
}

// labels entering the identity: {lambda} or, for O(2 ell), {lambda, tilde lambda}
inline std::vector<label> summed_labels(const dual_pair& p, const label& lambda) {
    if (p.kind != pair_kind::d_even) return {lambda};
    partition la(lambda);
    return {la.parts(), tilde(la, p.size()).parts()};
}

// smallest x-depth of a root of u_-: each H_k lives in depth >= k times this
inline int min_root_depth(const dual_pair& p) { return p.kind == pair_kind::b ? 1 : 2; }

// Character of the l-module attached to one coset representative.
inline series homology_block(const dual_pair& p, const weight& mu, truncation t) {
    const int N = t.vars;
    const partition_pair pp = extract_partitions(mu);
    if (p.s == side::classical) {
        series s = schur(pp.plus, alphabets::int_pos(N), t);
        if (p.kind == pair_kind::a) s = s * schur(pp.minus, alphabets::int_nonpos_inv(N), t);
        return s;
    }
    if (p.s == side::negative) {
        return schur(pp.plus.conjugate(), alphabets::int_pos(N), t) *
               schur(pp.minus.conjugate(), alphabets::int_nonpos_inv(N), t);
    }
    series s = hook_schur(pp.plus.conjugate(), alphabets::half_pos(N), alphabets::int_pos(N), t);
    if (p.kind == pair_kind::a)
        s = s * hook_schur(pp.minus, alphabets::int_nonpos_inv(N), alphabets::half_nonpos_inv(N), t);
    return s;
}

// sum over w in W^0_k of the block characters (for O(2 ell) super, summed over lambda and tilde lambda)
inline series homology_char(const dual_pair& p, const label& lambda, int k, truncation t) {
    series total(t);
    const auto levels = enumerate_w0(p.type(), k);
    std::vector<label> labels = {lambda};
    if (p.s == side::super && p.kind == pair_kind::d_even) labels = summed_labels(p, lambda);
    for (const auto& lab : labels) {
        const weight top = classical_highest_weight(p, lab);
        for (const auto& w : levels[k]) total += homology_block(p, dot_action(w, top), t);
    }
    return total;
}

inline series lie_denominator(const dual_pair& p, truncation t) {
    return denominator(p.s == side::super, "abcd"[static_cast<int>(p.type())], t);
}

// ---------------------------------------------------------------------------
// verification reports

struct discrepancy {
    monomial where;
    integer lhs;
    integer rhs;
};

struct character_report {
    std::string identity;
    nlohmann::ordered_json params;
    bool pass = false;
    std::optional<discrepancy> first;
    std::optional<double> timing_ms;
    nlohmann::ordered_json extra;
};

inline nlohmann::ordered_json monomial_json(const monomial& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& en : m.entries()) j[variable::unpack(en.var).key()] = en.exp;
    return j;
}

inline nlohmann::ordered_json to_json(const character_report& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["pass"] = r.pass;
    if (r.first) {
        j["first_discrepancy"] = {{"monomial", monomial_json(r.first->where)},
                                  {"lhs", r.first->lhs.str()},
                                  {"rhs", r.first->rhs.str()}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    j["details"] = r.extra.is_null() ? nlohmann::ordered_json::object() : r.extra;
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    else j["timing_ms"] = nullptr;
    return j;
}

class stopwatch {
public:
    stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void compare_into(character_report& r, const series& lhs, const series& rhs) {
    auto d = first_discrepancy(lhs, rhs);
    r.pass = !d.has_value();
    if (d) r.first = discrepancy{d->first, d->second.first, d->second.second};
}

inline nlohmann::ordered_json pair_params(const dual_pair& p, const label& lambda, truncation t) {
    nlohmann::ordered_json j;
    j["side"] = to_string(p.s);
    j["type"] = to_string(p.type());
    j[p.kind == pair_kind::d_even || p.kind == pair_kind::d_odd ? "m" : "ell"] = p.size();
    j["lambda"] = label_str(lambda);
    j["vars"] = t.vars;
    j["depth"] = t.depth;
    return j;
}

struct ep_options {
    std::optional<int> k_max;
    bool timing = false;
};

// ch L * D = sum_k (-1)^k ch H_k up to depth D
inline character_report verify_euler_poincare(const dual_pair& p, const label& lambda, truncation t,
                                              ep_options opt = {}) {
    stopwatch clock;
    character_report r;
    r.identity = p.s == side::negative ? "euler-poincare-negative" : "euler-poincare";
    r.params = pair_params(p, lambda, t);

    const int bound = t.depth / min_root_depth(p);
    const int k_max = opt.k_max.value_or(bound);
    r.params["k_max"] = k_max;

    series lhs = irr_char_via_duality(p, lambda, t) * lie_denominator(p, t);
    series rhs(t);
    // the classical O(2 ell) identity is taken for the sum over lambda and tilde lambda, as on the super side
    std::vector<label> labels = {lambda};
    if (p.s == side::classical) labels = summed_labels(p, lambda);
    const int k_last = std::max(k_max, bound) + 1;
    const auto levels = enumerate_w0(p.type(), k_last);
    nlohmann::ordered_json monitor = nlohmann::ordered_json::array();
    for (int k = 0; k <= k_last; ++k) {
        series hk(t);
        for (const auto& lab : labels) hk += homology_char(p, lab, k, t);
        int min_block_depth = -1;
        for (const auto& lab : summed_labels(p, lambda)) {
            const weight top = classical_highest_weight(p, lab);
            for (const auto& w : levels[k]) {
                auto pp = extract_partitions(dot_action(w, top));
                int d = pp.plus.size() + pp.minus.size();
                if (min_block_depth < 0 || d < min_block_depth) min_block_depth = d;
            }
        }
        monitor.push_back({{"k", k}, {"min_depth", min_block_depth}});
        if (k <= k_max) {
            if (k % 2) rhs -= hk;
            else rhs += hk;
        } else if (!hk.is_zero()) {
            r.extra["note"] = "k_max too small: length " + std::to_string(k) + " contributes within the depth bound";
        }
    }
    r.extra["depth_monitor"] = monitor;
    compare_into(r, lhs, rhs);
    if (r.extra.contains("note")) r.pass = false;
    if (opt.timing) r.timing_ms = clock.ms();
    return r;
}

// Casimir eigenvalue of w . Lambda agrees with that of Lambda, and likewise after theta on the super side.
inline character_report verify_casimir(const dual_pair& p, const label& lambda, int k_max, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = "casimir";
    r.params = pair_params(p, lambda, truncation{-1, -1});
    r.params.erase("vars");
    r.params.erase("depth");
    r.params["k_max"] = k_max;
    r.pass = true;
    const weight top = classical_highest_weight(p, lambda);
    const rational c0 = casimir_c(top);
    const rational s0 = casimir_s(super_highest_weight(p, lambda));
    r.extra["casimir"] = to_string(c0);
    if (c0 != s0 || theta(top) != super_highest_weight(p, lambda)) {
        r.pass = false;
        r.extra["failure"] = "theta transfer at the highest weight";
    }
    const auto levels = enumerate_w0(p.type(), k_max);
    long checks = 0;
    for (int k = 0; k <= k_max && r.pass; ++k) {
        for (const auto& w : levels[k]) {
            ++checks;
            const weight mu = dot_action(w, top);
            if (casimir_c(mu) != c0 || casimir_s(theta(mu)) != c0) {
                r.pass = false;
                r.extra["failure"] = "length " + std::to_string(k) + ": " + mu.str();
                break;
            }
        }
    }
    r.extra["checks"] = checks;
    if (timing) r.timing_ms = clock.ms();
    return r;
}

// sum_{w in W^0_k} H_{lambda,w} / Dbar, the character of the k-th term of the generalized Verma resolution
inline series verma_flag_char(const dual_pair& p, const label& lambda, int k, truncation t) {
    return homology_char(p, lambda, k, t) * denominator_inverse(p.s == side::super, "abcd"[static_cast<int>(p.type())], t);
}

// sum_k (-1)^k (verma flag at length k) = ch L, up to depth D (super side, or negative level)
inline character_report verify_resolution(const dual_pair& p, const label& lambda, truncation t, bool timing = false) {
    stopwatch clock;
    character_report r;
    r.identity = p.s == side::negative ? "resolution-negative" : "resolution";
    r.params = pair_params(p, lambda, t);
    const int k_max = t.depth / min_root_depth(p);
    r.params["k_max"] = k_max;
    series total(t);
    const series dinv = denominator_inverse(p.s == side::super, "abcd"[static_cast<int>(p.type())], t);
    for (int k = 0; k <= k_max; ++k) {
        series term = homology_char(p, lambda, k, t) * dinv;
        if (k % 2) total -= term;
        else total += term;
    }
    compare_into(r, total, irr_char_via_duality(p, lambda, t));
    if (timing) r.timing_ms = clock.ms();
    return r;
}

}  // namespace klab
