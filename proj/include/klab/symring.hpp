#pragma once

#include "numbers.hpp"
#include "partitions.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace klab {

enum class alphabet : std::uint8_t { x = 0, z = 1, eps = 2 };

struct variable {
    alphabet kind = alphabet::x;
    half_int index{};

    static variable x(half_int r) { return {alphabet::x, r}; }
    static variable x(int n) { return {alphabet::x, half_int(n)}; }
    static variable z(int i) { return {alphabet::z, half_int(i)}; }
    static variable eps() { return {alphabet::eps, half_int(0)}; }

    // x-int-pos, x-int-nonpos-inv, x-half-pos, x-half-nonpos-inv, z, epsilon
    std::string family() const {
        switch (kind) {
            case alphabet::z: return "z";
            case alphabet::eps: return "epsilon";
            case alphabet::x: break;
        }
        std::string s = index.is_integer() ? "x-int-" : "x-half-";
        return s + (index.positive() ? "pos" : "nonpos-inv");
    }

    std::string key() const {
        switch (kind) {
            case alphabet::x: return "x:" + index.str();
            case alphabet::z: return "z:" + index.str();
            case alphabet::eps: return "eps";
        }
        return "?";
    }

    static variable parse(const std::string& key) {
        if (key == "eps") return eps();
        if (key.size() > 2 && key[1] == ':') {
            half_int r = half_int::parse(key.substr(2));
            if (key[0] == 'x') return x(r);
            if (key[0] == 'z') return {alphabet::z, r};
        }
        throw std::invalid_argument("unknown variable '" + key + "'");
    }

    std::int32_t packed() const {
        return (static_cast<std::int32_t>(kind) << 24) | ((index.twice() + (1 << 20)) & 0xFFFFFF);
    }
    static variable unpack(std::int32_t p) {
        variable v;
        v.kind = static_cast<alphabet>(p >> 24);
        v.index = half_int::from_twice((p & 0xFFFFFF) - (1 << 20));
        return v;
    }
    auto operator<=>(const variable&) const = default;
};

// Exponents of x and z are stored doubled; the epsilon exponent is kept in {0, 1} since eps^2 = 1.
class monomial {
public:
    struct entry {
        std::int32_t var;
        std::int32_t exp;
        auto operator<=>(const entry&) const = default;
    };
    using storage = boost::container::small_vector<entry, 6>;

    monomial() = default;

    static monomial power(variable v, int twice_exp) {
        monomial m;
        if (v.kind == alphabet::eps) {
            twice_exp = ((twice_exp % 2) + 2) % 2;
        }
        if (twice_exp != 0) m.e_.push_back({v.packed(), twice_exp});
        return m;
    }
    static monomial x(half_int r, int exp = 1) { return power(variable::x(r), 2 * exp); }
    static monomial x(int n, int exp = 1) { return power(variable::x(n), 2 * exp); }
    static monomial z(int i, half_int exp) { return power(variable::z(i), exp.twice()); }
    static monomial z(int i, int exp = 1) { return power(variable::z(i), 2 * exp); }
    static monomial eps() { return power(variable::eps(), 1); }

    const storage& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }

    int twice_exponent(variable v) const {
        auto p = v.packed();
        for (const auto& en : e_)
            if (en.var == p) return en.exp;
        return 0;
    }

    // total |exponent| over x-variables
    int depth() const {
        int d = 0;
        for (const auto& en : e_) {
            if ((en.var >> 24) != 0) break;
            d += std::abs(en.exp);
        }
        return d / 2;
    }

    bool x_in_window(int vars) const {
        for (const auto& en : e_) {
            if ((en.var >> 24) != 0) break;
            int t = variable::unpack(en.var).index.twice();
            if (t > 2 * vars || t <= -2 * vars) return false;
        }
        return true;
    }

    monomial x_part() const {
        monomial m;
        for (const auto& en : e_)
            if ((en.var >> 24) == 0) m.e_.push_back(en);
        return m;
    }
    monomial non_x_part() const {
        monomial m;
        for (const auto& en : e_)
            if ((en.var >> 24) != 0) m.e_.push_back(en);
        return m;
    }

    monomial operator*(const monomial& o) const {
        monomial r;
        r.e_.reserve(e_.size() + o.e_.size());
        std::size_t i = 0, j = 0;
        while (i < e_.size() || j < o.e_.size()) {
            if (j == o.e_.size() || (i < e_.size() && e_[i].var < o.e_[j].var)) {
                r.e_.push_back(e_[i++]);
            } else if (i == e_.size() || o.e_[j].var < e_[i].var) {
                r.e_.push_back(o.e_[j++]);
            } else {
                std::int32_t v = e_[i].var;
                std::int32_t s = e_[i].exp + o.e_[j].exp;
                if ((v >> 24) == static_cast<std::int32_t>(alphabet::eps)) s %= 2;
                if (s != 0) r.e_.push_back({v, s});
                ++i;
                ++j;
            }
        }
        return r;
    }

    monomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("monomial::pow: negative power");
        monomial r;
        for (const auto& en : e_) {
            std::int32_t s = en.exp * k;
            if ((en.var >> 24) == static_cast<std::int32_t>(alphabet::eps)) s %= 2;
            if (s != 0) r.e_.push_back({en.var, s});
        }
        return r;
    }

    monomial inverse() const {
        monomial r = *this;
        for (auto& en : r.e_)
            if ((en.var >> 24) != static_cast<std::int32_t>(alphabet::eps)) en.exp = -en.exp;
        return r;
    }

    bool operator==(const monomial& o) const { return e_ == o.e_; }
    bool operator<(const monomial& o) const {
        return std::lexicographical_compare(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& en : e_) {
            h ^= static_cast<std::uint32_t>(en.var);
            h *= 1099511628211ull;
            h ^= static_cast<std::uint32_t>(en.exp);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    std::string str() const {
        if (e_.empty()) return "1";
        std::string s;
        for (const auto& en : e_) {
            if (!s.empty()) s += '*';
            variable v = variable::unpack(en.var);
            s += v.key();
            if (v.kind == alphabet::eps) continue;
            half_int e = half_int::from_twice(en.exp);
            if (e != half_int(1)) s += "^" + e.str();
        }
        return s;
    }

    void push_sorted(variable v, int stored_exp) {
        entry en{v.packed(), stored_exp};
        auto it = std::lower_bound(e_.begin(), e_.end(), en, [](const entry& a, const entry& b) { return a.var < b.var; });
        if (it != e_.end() && it->var == en.var) throw std::invalid_argument("monomial: repeated variable");
        if (stored_exp != 0) e_.insert(it, en);
    }

private:
    storage e_;
};

struct monomial_hash {
    std::size_t operator()(const monomial& m) const { return m.hash(); }
};

// N = variables kept per x-alphabet (x_r survives iff -N < r <= N), D = maximal x-depth.
struct truncation {
    int vars = -1;
    int depth = -1;

    static truncation none() { return {}; }
    bool bounded() const { return depth >= 0; }
    bool admits(const monomial& m) const {
        if (!bounded()) return true;
        return m.depth() <= depth && m.x_in_window(vars);
    }
    bool operator==(const truncation&) const = default;

    static truncation combine(const truncation& a, const truncation& b) {
        if (!a.bounded()) return b;
        if (!b.bounded()) return a;
        if (a != b) throw std::invalid_argument("series: mismatched truncation");
        return a;
    }
};

template <class C>
class basic_series {
public:
    using coefficient = C;
    using map_type = std::unordered_map<monomial, C, monomial_hash>;

    explicit basic_series(truncation t = truncation::none()) : t_(t) {}

    static basic_series constant(C c, truncation t = truncation::none()) {
        basic_series s(t);
        s.add_term(monomial(), std::move(c));
        return s;
    }
    static basic_series term(const monomial& m, C c, truncation t = truncation::none()) {
        basic_series s(t);
        s.add_term(m, std::move(c));
        return s;
    }

    const truncation& trunc() const { return t_; }
    const map_type& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const monomial& m, const C& c) {
        if (c == 0 || !t_.admits(m)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    C coefficient_of(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    std::vector<std::pair<monomial, C>> sorted_terms() const {
        std::vector<std::pair<monomial, C>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    int min_depth() const {
        int d = std::numeric_limits<int>::max();
        for (const auto& [m, c] : terms_) d = std::min(d, m.depth());
        return d;
    }

    basic_series& operator+=(const basic_series& o) {
        t_ = truncation::combine(t_, o.t_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        prune();
        return *this;
    }
    basic_series& operator-=(const basic_series& o) {
        t_ = truncation::combine(t_, o.t_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        prune();
        return *this;
    }
    friend basic_series operator+(basic_series a, const basic_series& b) { return a += b; }
    friend basic_series operator-(basic_series a, const basic_series& b) { return a -= b; }
    basic_series operator-() const {
        basic_series r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    basic_series& scale(const C& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= k;
        return *this;
    }

    basic_series times_monomial(const monomial& u, const C& k = C(1)) const {
        basic_series r(t_);
        for (const auto& [m, c] : terms_) r.add_term(m * u, c * k);
        return r;
    }

    friend basic_series operator*(const basic_series& a, const basic_series& b) {
        basic_series r(truncation::combine(a.t_, b.t_));
        if (a.is_zero() || b.is_zero()) return r;
        const basic_series& small = a.size() <= b.size() ? a : b;
        const basic_series& large = a.size() <= b.size() ? b : a;
        if (!r.t_.bounded()) {
            for (const auto& [ma, ca] : large.terms_)
                for (const auto& [mb, cb] : small.terms_) r.add_term(ma * mb, ca * cb);
            return r;
        }
        const int D = r.t_.depth;
        std::vector<std::vector<const typename map_type::value_type*>> buckets(D + 1);
        for (const auto& kv : small.terms_) {
            int d = kv.first.depth();
            if (d <= D) buckets[d].push_back(&kv);
        }
        for (const auto& [ma, ca] : large.terms_) {
            const int da = ma.depth();
            for (int d = 0; d + da <= D; ++d)
                for (const auto* kv : buckets[d]) r.add_term(ma * kv->first, ca * kv->second);
        }
        return r;
    }
    basic_series& operator*=(const basic_series& o) { return *this = *this * o; }

    // multiply by (1 + sign*u)
    basic_series& mul_binomial(const monomial& u, int sign) {
        basic_series r = *this;
        for (const auto& [m, c] : terms_) r.add_term(m * u, sign > 0 ? c : C(-c));
        return *this = std::move(r);
    }

    // multiply by 1/(1 - sign*u) = sum_k (sign*u)^k; requires u to have positive depth
    basic_series& mul_geometric(const monomial& u, int sign) {
        if (!t_.bounded() || u.depth() == 0)
            throw std::invalid_argument("geometric expansion needs a bounded depth and an x-dependent ratio");
        basic_series r = *this;
        basic_series power = *this;
        const int kmax = t_.depth / u.depth();
        for (int k = 1; k <= kmax; ++k) {
            basic_series next(t_);
            for (const auto& [m, c] : power.terms_) next.add_term(m * u, sign > 0 ? c : C(-c));
            if (next.is_zero()) break;
            r += next;
            power = std::move(next);
        }
        return *this = std::move(r);
    }

    basic_series truncated(truncation t) const {
        basic_series r(t);
        for (const auto& [m, c] : terms_) r.add_term(m, c);
        return r;
    }

    // substitute a monomial map variable-by-variable (used for z -> z^{-1} style symmetries)
    template <class F>
    basic_series map_monomials(F&& f) const {
        basic_series r(t_);
        for (const auto& [m, c] : terms_) r.add_term(f(m), c);
        return r;
    }

    bool operator==(const basic_series& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (const auto& [m, c] : terms_) {
            auto it = o.terms_.find(m);
            if (it == o.terms_.end() || it->second != c) return false;
        }
        return true;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) it = terms_.erase(it);
            else ++it;
        }
    }

    truncation t_;
    map_type terms_;
};

using series = basic_series<integer>;

// first monomial (in sorted order) where a and b differ, if any
template <class C>
std::optional<std::pair<monomial, std::pair<C, C>>> first_discrepancy(const basic_series<C>& a, const basic_series<C>& b) {
    std::vector<monomial> keys;
    for (const auto& [m, c] : a.terms())
        if (b.coefficient_of(m) != c) keys.push_back(m);
    for (const auto& [m, c] : b.terms())
        if (a.coefficient_of(m) != c) keys.push_back(m);
    if (keys.empty()) return std::nullopt;
    auto best = *std::min_element(keys.begin(), keys.end());
    return std::make_pair(best, std::make_pair(a.coefficient_of(best), b.coefficient_of(best)));
}

// ---------------------------------------------------------------------------
// x-alphabets inside a window of N variables per alphabet

namespace alphabets {

inline std::vector<monomial> int_pos(int n) {
    std::vector<monomial> v;
    for (int i = 1; i <= n; ++i) v.push_back(monomial::x(i));
    return v;
}
inline std::vector<monomial> half_pos(int n) {
    std::vector<monomial> v;
    for (int i = 1; i <= n; ++i) v.push_back(monomial::x(half_int::from_twice(2 * i - 1)));
    return v;
}
// x_0^{-1}, x_{-1}^{-1}, ...
inline std::vector<monomial> int_nonpos_inv(int n) {
    std::vector<monomial> v;
    for (int i = 0; i < n; ++i) v.push_back(monomial::x(-i, -1));
    return v;
}
// x_{-1/2}^{-1}, x_{-3/2}^{-1}, ...
inline std::vector<monomial> half_nonpos_inv(int n) {
    std::vector<monomial> v;
    for (int i = 1; i <= n; ++i) v.push_back(monomial::x(half_int::from_twice(1 - 2 * i), -1));
    return v;
}

}  // namespace alphabets

// ---------------------------------------------------------------------------
// symmetric functions in a list of "variables" (monomials of depth 1)

inline std::vector<series> complete_homogeneous(const std::vector<monomial>& vars, int kmax, truncation t) {
    std::vector<series> h(kmax + 1, series(t));
    if (kmax < 0) return h;
    h[0] = series::constant(1, t);
    for (const auto& v : vars) {
        for (int k = 1; k <= kmax; ++k) h[k] += h[k - 1].times_monomial(v);
    }
    return h;
}

inline std::vector<series> elementary(const std::vector<monomial>& vars, int kmax, truncation t) {
    std::vector<series> e(kmax + 1, series(t));
    if (kmax < 0) return e;
    e[0] = series::constant(1, t);
    for (const auto& v : vars) {
        for (int k = kmax; k >= 1; --k) e[k] += e[k - 1].times_monomial(v);
    }
    return e;
}

namespace detail {

// determinant by expansion along rows with memoisation over used-column masks
inline series determinant(const std::vector<std::vector<const series*>>& mat, truncation t) {
    const int n = static_cast<int>(mat.size());
    if (n == 0) return series::constant(1, t);
    std::unordered_map<unsigned, series> memo;
    auto rec = [&](auto&& self, int row, unsigned used) -> series {
        if (row == n) return series::constant(1, t);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        series acc(t);
        int sign_pos = 0;
        for (int col = 0; col < n; ++col) {
            if (used & (1u << col)) continue;
            const series* entry = mat[row][col];
            int sign = (sign_pos % 2 == 0) ? 1 : -1;
            ++sign_pos;
            if (entry == nullptr || entry->is_zero()) continue;
            series minor = self(self, row + 1, used | (1u << col));
            if (minor.is_zero()) continue;
            series prod = *entry * minor;
            if (sign < 0) acc -= prod;
            else acc += prod;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(rec, 0, 0u);
}

inline series jacobi_trudi(const std::vector<series>& seq, const std::vector<int>& outer, const std::vector<int>& inner,
                           truncation t) {
    const int n = static_cast<int>(outer.size());
    std::vector<std::vector<const series*>> mat(n, std::vector<const series*>(n, nullptr));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int idx = outer[i] - (j < static_cast<int>(inner.size()) ? inner[j] : 0) - i + j;
            if (idx >= 0 && idx < static_cast<int>(seq.size())) mat[i][j] = &seq[idx];
        }
    return determinant(mat, t);
}

}  // namespace detail

// s_{lambda/mu}; picks the smaller of the h- and e-determinants
inline series skew_schur(const partition& la, const partition& mu, const std::vector<monomial>& vars, truncation t) {
    if (!la.contains(mu)) return series(t);
    const int deg = la.size() - mu.size();
    if (t.bounded() && deg > t.depth) return series(t);
    if (deg == 0) return series::constant(1, t);
    if (la.length() <= la.part(1)) {
        auto h = complete_homogeneous(vars, deg, t);
        return detail::jacobi_trudi(h, la.parts(), mu.parts(), t);
    }
    auto e = elementary(vars, deg, t);
    return detail::jacobi_trudi(e, la.conjugate().parts(), mu.conjugate().parts(), t);
}

inline series schur(const partition& la, const std::vector<monomial>& vars, truncation t) {
    if (la.length() > static_cast<int>(vars.size())) return series(t);
    return skew_schur(la, partition(), vars, t);
}

// HS_lambda(x; y) = sum_{mu in lambda} s_mu(x) s_{(lambda/mu)'}(y)
inline series hook_schur(const partition& la, const std::vector<monomial>& xs, const std::vector<monomial>& ys,
                         truncation t) {
    series total(t);
    if (t.bounded() && la.size() > t.depth) return total;
    const partition lc = la.conjugate();
    for (int k = 0; k <= la.size(); ++k) {
        for (const auto& mu : partitions_of(k)) {
            if (!la.contains(mu)) continue;
            series a = schur(mu, xs, t);
            if (a.is_zero()) continue;
            series b = skew_schur(lc, mu.conjugate(), ys, t);
            if (b.is_zero()) continue;
            total += a * b;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Laurent polynomials in z_1..z_ell (doubled exponents) and optionally epsilon, used for group characters

class laurent {
public:
    using key = std::vector<int>;  // doubled exponents of z_1..z_ell, then the epsilon exponent

    explicit laurent(int ell = 0) : ell_(ell) {}

    static laurent monomial_of(int ell, key k, integer c = 1) {
        laurent p(ell);
        p.add(std::move(k), c);
        return p;
    }

    int ell() const { return ell_; }
    const std::map<key, integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(key k, const integer& c) {
        if (c == 0) return;
        k.resize(ell_ + 1, 0);
        k[ell_] = ((k[ell_] % 2) + 2) % 2;
        auto [it, ins] = terms_.try_emplace(std::move(k), c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    laurent& operator+=(const laurent& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    laurent& operator-=(const laurent& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend laurent operator+(laurent a, const laurent& b) { return a += b; }
    friend laurent operator-(laurent a, const laurent& b) { return a -= b; }
    friend laurent operator*(const laurent& a, const laurent& b) {
        laurent r(a.ell_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add(combine(ka, kb), ca * cb);
        return r;
    }

    laurent shifted(const key& k, const integer& c) const {
        laurent r(ell_);
        for (const auto& [kk, cc] : terms_) r.add(combine(kk, k), cc * c);
        return r;
    }

    // leading key in the order (total z-degree, then lex on z-exponents, then epsilon)
    const std::pair<const key, integer>& leading() const {
        if (terms_.empty()) throw std::logic_error("laurent::leading on zero");
        auto best = terms_.begin();
        for (auto it = terms_.begin(); it != terms_.end(); ++it)
            if (order_less(best->first, it->first)) best = it;
        return *best;
    }

    static bool order_less(const key& a, const key& b) {
        long da = 0, db = 0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) da += a[i];
        for (std::size_t i = 0; i + 1 < b.size(); ++i) db += b[i];
        if (da != db) return da < db;
        return a < b;
    }

    bool operator==(const laurent& o) const = default;

    series to_series() const {
        series s;
        for (const auto& [k, c] : terms_) s.add_term(to_monomial(k), c);
        return s;
    }

    monomial to_monomial(const key& k) const {
        monomial m;
        for (int i = 0; i < ell_; ++i) m = m * monomial::power(variable::z(i + 1), k[i]);
        if (k[ell_]) m = m * monomial::eps();
        return m;
    }

    // exact quotient; throws if b does not divide a
    static laurent divide_exact(laurent a, const laurent& b) {
        if (b.is_zero()) throw std::domain_error("laurent: division by zero");
        laurent q(a.ell_);
        const auto [lb, cb] = b.leading();
        for (int guard = 0; !a.is_zero(); ++guard) {
            if (guard > 1000000) throw std::domain_error("laurent: inexact division");
            const auto [la, ca] = a.leading();
            if (ca % cb != 0) throw std::domain_error("laurent: inexact division");
            key shift(a.ell_ + 1);
            for (int i = 0; i < a.ell_; ++i) shift[i] = la[i] - lb[i];
            shift[a.ell_] = la[a.ell_] - lb[a.ell_];
            integer c = ca / cb;
            q.add(shift, c);
            a -= b.shifted(shift, c);
        }
        return q;
    }

private:
    static key combine(const key& a, const key& b) {
        key r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        r.back() %= 2;
        return r;
    }

    int ell_;
    std::map<key, integer> terms_;
};

namespace detail {

// sum over permutations of sign * prod_i f(a_i, z_{sigma(i)}) where f(a, z) is a short Laurent polynomial
template <class F>
laurent alternant(int ell, const std::vector<int>& twice_a, F&& f) {
    std::vector<int> perm(ell);
    for (int i = 0; i < ell; ++i) perm[i] = i;
    laurent total(ell);
    do {
        int inv = 0;
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j) inv += perm[i] > perm[j];
        laurent prod = laurent::monomial_of(ell, laurent::key(ell + 1, 0), inv % 2 ? -1 : 1);
        for (int i = 0; i < ell; ++i) prod = prod * f(twice_a[i], perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline laurent z_power(int ell, int var, int twice_e) {
    laurent::key k(ell + 1, 0);
    k[var] = twice_e;
    return laurent::monomial_of(ell, k);
}

inline laurent z_sym(int ell, int var, int twice_e, int sign) {
    laurent p = z_power(ell, var, twice_e);
    laurent q = z_power(ell, var, -twice_e);
    if (sign < 0) p -= q;
    else p += q;
    return p;
}

}  // namespace detail

enum class group_kind { gl, sp, o_even, o_odd, pin };

inline std::string to_string(group_kind g) {
    switch (g) {
        case group_kind::gl: return "GL";
        case group_kind::sp: return "Sp";
        case group_kind::o_even: return "O-even";
        case group_kind::o_odd: return "O-odd";
        case group_kind::pin: return "Pin";
    }
    return "?";
}

// Schur-Laurent polynomial of a generalized partition of length ell (bialternant)
inline laurent gl_character(const generalized_partition& la) {
    const int ell = la.length();
    if (ell == 0) return laurent::monomial_of(0, {0});
    const int shift = la.part(ell);
    std::vector<int> a(ell), d(ell);
    for (int i = 1; i <= ell; ++i) {
        a[i - 1] = 2 * (la.part(i) - shift + ell - i);
        d[i - 1] = 2 * (ell - i);
    }
    auto f = [ell](int ta, int var) { return detail::z_power(ell, var, ta); };
    laurent q = laurent::divide_exact(detail::alternant(ell, a, f), detail::alternant(ell, d, f));
    laurent::key k(ell + 1, 2 * shift);
    k[ell] = 0;
    return q.shifted(k, 1);
}

// irreducible characters of Sp(2ell), O(2ell), O(2ell+1) (without epsilon) and Pin(2ell), via Weyl's formula
inline laurent orthosymplectic_character(group_kind g, const partition& la, int ell) {
    if (la.length() > ell) throw std::invalid_argument("group character: partition longer than ell");
    if (ell == 0) return laurent::monomial_of(0, {0});
    std::vector<int> a(ell), d(ell);
    auto lam = [&](int i) { return la.part(i); };
    switch (g) {
        case group_kind::sp:
            for (int i = 1; i <= ell; ++i) {
                a[i - 1] = 2 * (lam(i) + ell - i + 1);
                d[i - 1] = 2 * (ell - i + 1);
            }
            break;
        case group_kind::o_odd:
            for (int i = 1; i <= ell; ++i) {
                a[i - 1] = 2 * (lam(i) + ell - i) + 1;
                d[i - 1] = 2 * (ell - i) + 1;
            }
            break;
        case group_kind::o_even:
            for (int i = 1; i <= ell; ++i) {
                a[i - 1] = 2 * (lam(i) + ell - i);
                d[i - 1] = 2 * (ell - i);
            }
            break;
        case group_kind::pin:
            for (int i = 1; i <= ell; ++i) {
                a[i - 1] = 2 * (lam(i) + ell - i) + 1;
                d[i - 1] = 2 * (ell - i);
            }
            break;
        case group_kind::gl: throw std::invalid_argument("use gl_character");
    }
    if (g == group_kind::sp || g == group_kind::o_odd) {
        auto f = [ell](int ta, int var) { return detail::z_sym(ell, var, ta, -1); };
        return laurent::divide_exact(detail::alternant(ell, a, f), detail::alternant(ell, d, f));
    }
    // e(0) = 1, e(a) = z^a + z^{-a}: sum of the two so(2ell) characters when the last entry is nonzero
    auto f = [ell](int ta, int var) {
        if (ta == 0) return laurent::monomial_of(ell, laurent::key(ell + 1, 0));
        return detail::z_sym(ell, var, ta, +1);
    };
    return laurent::divide_exact(detail::alternant(ell, a, f), detail::alternant(ell, d, f));
}

// ch V^lambda for the group acting on the ell-fold Fock space; `size` is m for the orthogonal groups.
// For O(m), lambda ranges over P(O(m)); for O(2ell+1) the character carries eps^{|lambda|}.
inline laurent group_character(group_kind g, const partition& la, int size) {
    switch (g) {
        case group_kind::gl: return gl_character(generalized_partition::pad(la, size));
        case group_kind::sp: return orthosymplectic_character(g, la, size);
        case group_kind::pin: return orthosymplectic_character(g, la, size);
        case group_kind::o_even:
        case group_kind::o_odd: {
            const int m = size;
            const int ell = m / 2;
            if ((m % 2 == 1) != (g == group_kind::o_odd)) throw std::invalid_argument("group character: parity of m");
            if (!in_orthogonal_range(la, m)) throw std::invalid_argument("group character: partition not in P(O(m))");
            partition base = la.length() <= ell ? la : tilde(la, m);
            laurent c = orthosymplectic_character(g, base, ell);
            if (g == group_kind::o_odd && la.size() % 2 == 1) {
                laurent::key k(ell + 1, 0);
                k[ell] = 1;
                c = c.shifted(k, 1);
            }
            return c;
        }
    }
    return laurent();
}

// ---------------------------------------------------------------------------
// denominators: products of (1 - u) and 1/(1 + u) over root monomials

struct denominator_factors {
    std::vector<monomial> even;  // (1 - u)
    std::vector<monomial> odd;   // 1/(1 + u)
};

inline denominator_factors denominator_roots(bool super, char type, int n) {
    denominator_factors f;
    auto X = [](int twice) { return monomial::x(half_int::from_twice(twice)); };
    auto Xinv = [](int twice) { return monomial::x(half_int::from_twice(twice), -1); };
    if (type == 'a') {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                f.even.push_back(Xinv(2 * (1 - i)) * X(2 * j));
                if (!super) continue;
                f.even.push_back(Xinv(1 - 2 * i) * X(2 * j - 1));
                f.odd.push_back(Xinv(2 * (1 - i)) * X(2 * j - 1));
                f.odd.push_back(Xinv(1 - 2 * i) * X(2 * j));
            }
        return f;
    }
    // positive indices r in (1/2)N (super) or N (classical)
    std::vector<int> idx;
    for (int t = 1; t <= 2 * n; ++t)
        if (super || t % 2 == 0) idx.push_back(t);
    auto parity = [](int t) { return t % 2 == 0 ? 0 : 1; };  // 1 = odd
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const int r = idx[a];
        // single roots delta_r (type b)
        if (type == 'b') (parity(r) ? f.odd : f.even).push_back(X(r));
        for (std::size_t b = a; b < idx.size(); ++b) {
            const int s = idx[b];
            const bool same = a == b;
            const int p = (parity(r) + parity(s)) % 2;
            if (same) {
                // delta_r + delta_r: in S^2 for even r (type c), in Lambda^2 for odd r (types b, d)
                if (type == 'c' && parity(r) == 0) f.even.push_back(X(r).pow(2));
                if ((type == 'b' || type == 'd') && parity(r) == 1) f.even.push_back(X(r).pow(2));
                continue;
            }
            (p ? f.odd : f.even).push_back(X(r) * X(s));
        }
    }
    return f;
}

inline series denominator(bool super, char type, truncation t) {
    const auto f = denominator_roots(super, type, t.vars);
    series s = series::constant(1, t);
    for (const auto& u : f.even) s.mul_binomial(u, -1);
    for (const auto& u : f.odd) s.mul_geometric(u, -1);
    return s;
}

inline series denominator_inverse(bool super, char type, truncation t) {
    const auto f = denominator_roots(super, type, t.vars);
    series s = series::constant(1, t);
    for (const auto& u : f.even) s.mul_geometric(u, +1);
    for (const auto& u : f.odd) s.mul_binomial(u, +1);
    return s;
}

}  // namespace klab
