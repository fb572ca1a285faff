#pragma once

#include "numbers.hpp"
#include "partitions.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace klab {

enum class side { classical, super, negative };
enum class lie_type { a, b, c, d };

struct algebra_id {
    side s = side::classical;
    lie_type t = lie_type::a;
    auto operator<=>(const algebra_id&) const = default;
};

inline std::string to_string(side s) {
    switch (s) {
        case side::classical: return "classical";
        case side::super: return "super";
        case side::negative: return "negative";
    }
    return "?";
}

inline std::string to_string(lie_type t) {
    return std::string(1, static_cast<char>('a' + static_cast<int>(t)));
}

inline side parse_side(const std::string& s) {
    if (s == "classical") return side::classical;
    if (s == "super") return side::super;
    if (s == "negative") return side::negative;
    throw std::invalid_argument("unknown side '" + s + "'");
}

inline lie_type parse_type(const std::string& s) {
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'd') return static_cast<lie_type>(s[0] - 'a');
    throw std::invalid_argument("unknown type '" + s + "'");
}

// <Lambda_0, K> for the classical algebras; every super vacuum weight has 1.
inline rational vacuum_level(algebra_id alg) {
    if (alg.s == side::super) return rational(1);
    switch (alg.t) {
        case lie_type::b:
        case lie_type::d: return rational(1, 2);
        default: return rational(1);
    }
}

// Integral weight: finitely many nonzero coordinates on epsilon_i (classical) or delta_r (super),
// plus the level <mu, K>.  Keys are integers for classical weights and (1/2)Z for super ones.
class weight {
public:
    weight() = default;
    weight(algebra_id alg, rational level) : alg_(alg), level_(level) {}

    algebra_id algebra() const { return alg_; }
    const rational& level() const { return level_; }
    void set_level(rational l) { level_ = l; }
    const std::map<half_int, long>& coords() const { return coords_; }

    long operator[](half_int r) const {
        auto it = coords_.find(r);
        return it == coords_.end() ? 0 : it->second;
    }
    long at(int i) const { return (*this)[half_int(i)]; }

    void set(half_int r, long v) {
        if (alg_.s != side::super && !r.is_integer())
            throw std::invalid_argument("weight: classical weights have integer indices");
        if (v == 0) coords_.erase(r);
        else coords_[r] = v;
    }
    void set(int i, long v) { set(half_int(i), v); }
    void add(half_int r, long v) { set(r, (*this)[r] + v); }
    void add(int i, long v) { add(half_int(i), v); }

    // coefficient of Lambda_0
    rational vacuum_coefficient() const { return level_ / vacuum_level(alg_); }

    bool operator==(const weight& o) const = default;

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [r, v] : coords_) {
            if (!first) s += ", ";
            first = false;
            s += (alg_.s == side::super ? "d" : "e") + r.str() + ":" + std::to_string(v);
        }
        return s + "; level " + to_string(level_) + "}";
    }

private:
    algebra_id alg_{};
    std::map<half_int, long> coords_;
    rational level_{0};
};

inline algebra_id classical_of(lie_type t) { return {side::classical, t}; }
inline algebra_id super_of(lie_type t) { return {side::super, t}; }

// Lambda^a(lambda) = ell Lambda_0 + sum_j lambda'_j epsilon_j
inline weight classical_hw_a(const generalized_partition& la) {
    weight w(classical_of(lie_type::a), rational(la.length()));
    if (la.length() == 0) return w;
    for (int j = std::min(la.part(la.length()) + 1, 1); j <= std::max(la.part(1), 0); ++j) w.set(j, la.column(j));
    return w;
}

// Types b, c, d.  `size` is ell for b, c and m for d.
inline weight classical_hw(lie_type t, const partition& la, int size) {
    if (t == lie_type::a) return classical_hw_a(generalized_partition::pad(la, size));
    rational level;
    switch (t) {
        case lie_type::b:
        case lie_type::c:
            if (la.length() > size) throw std::invalid_argument("classical_hw: partition longer than ell");
            level = rational(size);
            break;
        case lie_type::d:
            if (!in_orthogonal_range(la, size)) throw std::invalid_argument("classical_hw: partition not in P(O(m))");
            level = rational(size, 2);
            break;
        default: break;
    }
    weight w(classical_of(t), level);
    for (int k = 1; k <= la.part(1); ++k) w.set(k, la.column(k));
    return w;
}

// Super highest weights.  `size` is ell for a, b, c and m for d.
inline weight super_hw_a(const generalized_partition& la) {
    const int ell = la.length();
    weight w(super_of(lie_type::a), rational(ell));
    if (ell == 0) return w;
    const int top = std::max(std::abs(la.part(1)), std::abs(la.part(ell))) + ell + 2;
    for (int i = 1; i <= top; ++i) w.set(i, angle(la.column(i) - i));
    for (int j = 0; j >= -top; --j) w.set(j, -angle(-la.column(j) + j));
    for (int k = 1; k <= ell; ++k) {
        // r = k - 1/2, uses lambda_{r + 1/2} - (r - 1/2) = lambda_k - (k - 1)
        w.set(half_int::from_twice(2 * k - 1), angle(la.part(k) - (k - 1)));
    }
    for (int k = 1; k <= ell; ++k) {
        // s = -(k - 1/2), uses lambda_{ell + s + 1/2} = lambda_{ell - k + 1}
        int s_twice = -(2 * k - 1);
        int lam = la.part(ell - k + 1);
        w.set(half_int::from_twice(s_twice), -angle(-lam + (-k)));
    }
    return w;
}

inline weight super_hw(lie_type t, const partition& la, int size) {
    if (t == lie_type::a) return super_hw_a(generalized_partition::pad(la, size));
    rational level;
    if (t == lie_type::d) {
        if (!in_orthogonal_range(la, size)) throw std::invalid_argument("super_hw: partition not in P(O(m))");
        level = rational(size, 2);
    } else {
        if (la.length() > size) throw std::invalid_argument("super_hw: partition longer than ell");
        level = rational(size);
    }
    weight w(super_of(t), level);
    for (int i = 1; i <= la.length() + 1; ++i) w.set(i, angle(la.column(i) - i));
    for (int k = 1; k <= la.length() + 1; ++k) w.set(half_int::from_twice(2 * k - 1), angle(la.part(k) - (k - 1)));
    return w;
}

// Lambda^a_-(lambda) = sum_{k<=i} lambda_k e_k + sum_{k>j} lambda_k e_{k-ell} - ell Lambda_0
inline weight negative_hw(const generalized_partition& la) {
    const int ell = la.length();
    weight w({side::negative, lie_type::a}, rational(-ell));
    for (int k = 1; k <= ell; ++k) {
        if (la.part(k) > 0) w.set(k, la.part(k));
        else if (la.part(k) < 0) w.set(k - ell, la.part(k));
    }
    return w;
}

// <mu, alpha_i^vee>; the pairing with K enters through the level
inline rational coroot_pairing(const weight& mu, int i) {
    const lie_type t = mu.algebra().t;
    if (mu.algebra().s == side::super) throw std::invalid_argument("coroot_pairing: classical weights only");
    if (t == lie_type::a) {
        rational p(mu.at(i) - mu.at(i + 1));
        if (i == 0) p += mu.level();
        return p;
    }
    if (i < 0) throw std::out_of_range("coroot_pairing: index must be >= 0");
    if (i >= 1) return rational(mu.at(i) - mu.at(i + 1));
    switch (t) {
        case lie_type::b: return rational(-2 * mu.at(1)) + 2 * mu.level();
        case lie_type::c: return rational(-mu.at(1)) + mu.level();
        case lie_type::d: return rational(-mu.at(1) - mu.at(2)) + 2 * mu.level();
        default: break;
    }
    return rational(0);
}

// alpha_i as epsilon coordinates
inline std::map<int, long> simple_root(lie_type t, int i) {
    if (t == lie_type::a || i >= 1) return {{i, 1}, {i + 1, -1}};
    switch (t) {
        case lie_type::b: return {{1, -1}};
        case lie_type::c: return {{1, -2}};
        case lie_type::d: return {{1, -1}, {2, -1}};
        default: break;
    }
    return {};
}

inline weight reflect(const weight& mu, int i) {
    long p = to_int(coroot_pairing(mu, i));
    weight out = mu;
    for (auto [k, c] : simple_root(mu.algebra().t, i)) out.add(k, -p * c);
    return out;
}

// sigma_i . mu = mu - (<mu, alpha_i^vee> + 1) alpha_i, using <rho_c, alpha_i^vee> = 1
inline weight dot_reflect(const weight& mu, int i) {
    long p = to_int(coroot_pairing(mu, i)) + 1;
    weight out = mu;
    for (auto [k, c] : simple_root(mu.algebra().t, i)) out.add(k, -p * c);
    return out;
}

// (rho_c | epsilon_i)_c
inline rational rho_pairing(lie_type t, int i) {
    switch (t) {
        case lie_type::a: return rational(-i);
        case lie_type::b: return rational(-2 * i + 1, 2);
        case lie_type::c: return rational(-i);
        case lie_type::d: return rational(-i + 1);
    }
    return rational(0);
}

// (mu + 2 rho_c | mu)_c, with (eps_i|eps_j) = delta_ij, (Lambda_0|Lambda_0) = 0 = (Lambda_0|rho_c),
// (Lambda_0|eps_i) = -zeta(i)/2 in type a and -<Lambda_0,K> otherwise.
inline rational casimir_c(const weight& mu) {
    const algebra_id alg = mu.algebra();
    if (alg.s == side::super) throw std::invalid_argument("casimir_c: classical weight expected");
    const lie_type t = alg.t;
    const rational n = mu.vacuum_coefficient();
    rational total(0);
    for (const auto& [r, c] : mu.coords()) {
        const int i = r.as_int();
        total += rational(c * c);
        total += 2 * rational(c) * rho_pairing(t, i);
        if (t == lie_type::a) {
            const int zeta = i > 0 ? 1 : -1;
            total -= n * rational(zeta * c);
        } else {
            total -= 2 * n * vacuum_level(alg) * rational(c);
        }
    }
    return total;
}

// (rho_s | delta_r)_s
inline rational rho_super_pairing(lie_type t) {
    switch (t) {
        case lie_type::b: return rational(1, 2);
        case lie_type::d: return rational(1);
        default: return rational(0);
    }
}

// (mu + 2 rho_s | mu)_s with (delta_r|delta_t) = (-1)^{2r} delta_rt
inline rational casimir_s(const weight& mu) {
    const algebra_id alg = mu.algebra();
    if (alg.s != side::super) throw std::invalid_argument("casimir_s: super weight expected");
    const rational n = mu.level();
    rational total(0);
    for (const auto& [r, c] : mu.coords()) {
        total += rational(r.parity_sign() * c * c);
        if (alg.t == lie_type::a) {
            const int zeta = r.positive() ? 1 : -1;
            total -= n * rational(zeta * c);
        } else {
            total -= 2 * n * rational(c);
            total += 2 * rational(c) * rho_super_pairing(alg.t);
        }
    }
    return total;
}

// mu^+ = (mu_1, mu_2, ...) in type a, or the whole coordinate list otherwise
inline partition positive_block(const weight& mu) {
    std::vector<int> v;
    for (int i = 1;; ++i) {
        long c = mu.at(i);
        if (c == 0) {
            for (const auto& [r, x] : mu.coords())
                if (r.as_int() > i) throw std::invalid_argument("weight " + mu.str() + " has no partition block");
            break;
        }
        v.push_back(static_cast<int>(c));
    }
    try {
        return partition(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("weight " + mu.str() + " has no partition block");
    }
}

// mu^- = (-mu_0, -mu_{-1}, ...) in type a
inline partition negative_block(const weight& mu) {
    std::vector<int> v;
    for (int j = 0;; --j) {
        long c = -mu.at(j);
        if (c == 0) {
            for (const auto& [r, x] : mu.coords())
                if (r.as_int() < j) throw std::invalid_argument("weight " + mu.str() + " has no partition block");
            break;
        }
        v.push_back(static_cast<int>(c));
    }
    try {
        return partition(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("weight " + mu.str() + " has no partition block");
    }
}

// theta(mu) = sum a_r delta_r - sum b_s delta_{-s} + level Lambdabar_0, a = theta1(mu^+), b = theta2(mu^-)
inline weight theta(const weight& mu) {
    const algebra_id alg = mu.algebra();
    if (alg.s != side::classical) throw std::invalid_argument("theta: classical weight expected");
    weight out(super_of(alg.t), mu.level());
    for (const auto& [r, v] : theta1(positive_block(mu))) out.set(r, v);
    if (alg.t == lie_type::a) {
        for (const auto& [s, v] : theta2(negative_block(mu))) out.set(-s, -v);
    } else if (mu.coords().size() && mu.coords().begin()->first.twice() <= 0) {
        throw std::invalid_argument("theta: coordinates at non-positive indices");
    }
    return out;
}

// Conjugates the positive and negative blocks and negates the level.
inline weight vartheta(const weight& mu) {
    const algebra_id alg = mu.algebra();
    if (alg.t != lie_type::a || alg.s == side::super) throw std::invalid_argument("vartheta: type a weight expected");
    algebra_id target{alg.s == side::classical ? side::negative : side::classical, lie_type::a};
    weight out(target, -mu.level());
    partition plus = positive_block(mu).conjugate();
    partition minus = negative_block(mu).conjugate();
    for (int i = 1; i <= plus.length(); ++i) out.set(i, plus.part(i));
    for (int j = 0; j > -minus.length(); --j) out.set(j, -minus.part(1 - j));
    return out;
}

}  // namespace klab
