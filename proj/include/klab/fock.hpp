#pragma once

#include "symring.hpp"
#include "weights.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace klab {

// The dual pairs: a Lie (super)algebra side together with the group acting on ell copies of the Fock space.
enum class pair_kind { a, b, c, d_even, d_odd };

struct dual_pair {
    side s = side::classical;
    pair_kind kind = pair_kind::a;
    int ell = 1;  // number of Fock space copies; m = 2 ell or 2 ell + 1 for the orthogonal groups

    lie_type type() const {
        switch (kind) {
            case pair_kind::a: return lie_type::a;
            case pair_kind::b: return lie_type::b;
            case pair_kind::c: return lie_type::c;
            default: return lie_type::d;
        }
    }

    group_kind group() const {
        switch (kind) {
            case pair_kind::a: return group_kind::gl;
            case pair_kind::b: return group_kind::pin;
            case pair_kind::c: return group_kind::sp;
            case pair_kind::d_even: return group_kind::o_even;
            case pair_kind::d_odd: return group_kind::o_odd;
        }
        return group_kind::gl;
    }

    // ell, or m for the orthogonal groups
    int size() const {
        if (kind == pair_kind::d_even) return 2 * ell;
        if (kind == pair_kind::d_odd) return 2 * ell + 1;
        return ell;
    }

    std::string name() const {
        static const char* names[] = {"a", "b", "c", "d-even", "d-odd"};
        std::string n = names[static_cast<int>(kind)];
        if (s == side::super) n += "-super";
        if (s == side::negative) n += "-negative";
        return n;
    }

    static dual_pair for_type(side s, lie_type t, int size) {
        dual_pair p;
        p.s = s;
        switch (t) {
            case lie_type::a: p.kind = pair_kind::a; p.ell = size; break;
            case lie_type::b: p.kind = pair_kind::b; p.ell = size; break;
            case lie_type::c: p.kind = pair_kind::c; p.ell = size; break;
            case lie_type::d:
                p.kind = size % 2 == 0 ? pair_kind::d_even : pair_kind::d_odd;
                p.ell = size / 2;
                break;
        }
        if (s == side::negative && t != lie_type::a) throw std::invalid_argument("negative level is type a only");
        if (p.ell < 1) throw std::invalid_argument("dual pair needs ell >= 1");
        return p;
    }

    static dual_pair parse(const std::string& name, int ell) {
        dual_pair p;
        p.ell = ell;
        std::string base = name;
        auto strip = [&](const std::string& suffix) {
            if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
                base.resize(base.size() - suffix.size());
                return true;
            }
            return false;
        };
        if (strip("-super")) p.s = side::super;
        else if (strip("-negative")) p.s = side::negative;
        if (base == "a") p.kind = pair_kind::a;
        else if (base == "b") p.kind = pair_kind::b;
        else if (base == "c") p.kind = pair_kind::c;
        else if (base == "d-even") p.kind = pair_kind::d_even;
        else if (base == "d-odd") p.kind = pair_kind::d_odd;
        else throw std::invalid_argument("unknown dual pair '" + name + "'");
        if (p.s == side::negative && p.kind != pair_kind::a) throw std::invalid_argument("negative level is type a only");
        if (ell < 1) throw std::invalid_argument("ell must be positive");
        return p;
    }
};

// Character of ell copies of the Fock space as a series in x, z (and eps for O(2ell+1)).
inline series fock_char(const dual_pair& p, truncation t) {
    if (!t.bounded()) throw std::invalid_argument("fock_char: needs a bounded truncation");
    const int N = t.vars;
    series s = series::constant(1, t);
    const bool super = p.s == side::super;
    const monomial e = p.kind == pair_kind::d_odd ? monomial::eps() : monomial();
    auto z = [](int i, int sign) { return monomial::z(i, sign); };

    if (p.kind == pair_kind::b) {
        for (int i = 1; i <= p.ell; ++i) {
            series spin(t);
            spin.add_term(monomial::z(i, half), 1);
            spin.add_term(monomial::z(i, -half), 1);
            s = s * spin;
        }
    }

    for (int i = 1; i <= p.ell; ++i) {
        for (int n = 1; n <= N; ++n) {
            const monomial xn = monomial::x(n);
            if (p.kind == pair_kind::a) {
                const monomial xinv = monomial::x(1 - n, -1);
                if (p.s == side::negative) {
                    s.mul_geometric(xn * z(i, 1), +1);
                    s.mul_geometric(xinv * z(i, -1), +1);
                } else {
                    s.mul_binomial(xn * z(i, 1), +1);
                    s.mul_binomial(xinv * z(i, -1), +1);
                }
            } else {
                s.mul_binomial(e * xn * z(i, 1), +1);
                s.mul_binomial(e * xn * z(i, -1), +1);
            }
            if (!super) continue;
            const monomial xr = monomial::x(half_int::from_twice(2 * n - 1));
            if (p.kind == pair_kind::a) {
                const monomial xrinv = monomial::x(half_int::from_twice(1 - 2 * n), -1);
                s.mul_geometric(xr * z(i, 1), +1);
                s.mul_geometric(xrinv * z(i, -1), +1);
            } else {
                s.mul_geometric(e * xr * z(i, 1), +1);
                s.mul_geometric(e * xr * z(i, -1), +1);
            }
        }
    }

    // the zero weight of C^{2 ell + 1} contributes one unpaired factor per x-variable
    if (p.kind == pair_kind::d_odd) {
        for (int n = 1; n <= N; ++n) {
            s.mul_binomial(e * monomial::x(n), +1);
            if (super) s.mul_geometric(e * monomial::x(half_int::from_twice(2 * n - 1)), +1);
        }
    }
    return s;
}

// homogeneous pieces by x-depth
inline std::map<int, series> depth_components(const series& s) {
    std::map<int, series> out;
    for (const auto& [m, c] : s.terms()) {
        auto it = out.try_emplace(m.depth(), series(s.trunc())).first;
        it->second.add_term(m, c);
    }
    return out;
}

}  // namespace klab
