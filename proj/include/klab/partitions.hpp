#pragma once

#include "numbers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace klab {

class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
    }

    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    // lambda_i, 1-indexed, zero past the end
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    // lambda'_j, 1-indexed
    int column(int j) const {
        if (j < 1) throw std::out_of_range("partition::column: index must be positive");
        int c = 0;
        while (c < length() && parts_[c] >= j) ++c;
        return c;
    }

    partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= part(1); ++j) c.push_back(column(j));
        return partition(std::move(c));
    }

    bool contains(const partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    auto operator<=>(const partition&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static partition parse(const std::string& text) {
        std::vector<int> v;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            v.push_back(std::stoi(item));
        }
        return partition(std::move(v));
    }

private:
    std::vector<int> parts_;
};

// Weakly decreasing integer sequence of fixed length; entries may be negative.
class generalized_partition {
public:
    generalized_partition() = default;

    explicit generalized_partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                throw std::invalid_argument("generalized_partition: parts must be weakly decreasing");
    }

    generalized_partition(std::initializer_list<int> parts) : generalized_partition(std::vector<int>(parts)) {}

    static generalized_partition pad(const partition& p, int ell) {
        if (p.length() > ell) throw std::invalid_argument("partition longer than ell");
        std::vector<int> v(ell, 0);
        for (int i = 0; i < p.length(); ++i) v[i] = p.parts()[i];
        return generalized_partition(std::move(v));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(i - 1); }

    // lambda'_k for k >= 1 counts parts >= k; for k <= 0 it is -#{i : lambda_i <= k-1}.
    int column(int k) const {
        int c = 0;
        if (k >= 1) {
            for (int p : parts_) c += p >= k;
            return c;
        }
        for (int p : parts_) c += p <= k - 1;
        return -c;
    }

    // nonnegative entries as a partition
    partition positive_part() const {
        std::vector<int> v;
        for (int p : parts_)
            if (p > 0) v.push_back(p);
        return partition(std::move(v));
    }

    // (-lambda_ell, -lambda_{ell-1}, ...) restricted to negative entries
    partition negative_part() const {
        std::vector<int> v;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
            if (*it < 0) v.push_back(-*it);
        return partition(std::move(v));
    }

    int abs_size() const {
        int s = 0;
        for (int p : parts_) s += std::abs(p);
        return s;
    }

    auto operator<=>(const generalized_partition&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static generalized_partition parse(const std::string& text, int ell) {
        std::vector<int> v;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            v.push_back(std::stoi(item));
        }
        if (static_cast<int>(v.size()) > ell) throw std::invalid_argument("generalized partition longer than ell");
        v.resize(ell, 0);
        // a short list like "1" pads with zeros; negative tails must be written out
        return generalized_partition(std::move(v));
    }

private:
    std::vector<int> parts_;
};

inline int angle(int k) { return std::max(k, 0); }

// Sequences indexed by (1/2)Z_+; only nonzero entries are stored.
using half_sequence = std::map<half_int, int>;

inline void set_entry(half_sequence& s, half_int r, int v) {
    if (v != 0) s[r] = v;
    else s.erase(r);
}

inline int entry(const half_sequence& s, half_int r) {
    auto it = s.find(r);
    return it == s.end() ? 0 : it->second;
}

// (<l'_1>, <l_1 - 1>, <l'_2 - 1>, <l_2 - 2>, ...) indexed by 1/2, 1, 3/2, ...
inline half_sequence theta1(const partition& la) {
    half_sequence a;
    int n = std::max(la.length(), la.part(1)) + 1;
    for (int k = 1; k <= n; ++k) {
        set_entry(a, half_int::from_twice(2 * k - 1), angle(la.column(k) - (k - 1)));
        set_entry(a, half_int(k), angle(la.part(k) - k));
    }
    return a;
}

// rows and columns indexed from 0: (<l_0>, <l'_0 - 1>, <l_1 - 1>, <l'_1 - 2>, ...) at 0, 1/2, 1, ...
inline half_sequence theta2(const partition& la) {
    half_sequence b;
    int n = std::max(la.length(), la.part(1)) + 1;
    for (int k = 0; k <= n; ++k) {
        set_entry(b, half_int(k), angle(la.part(k + 1) - k));
        set_entry(b, half_int::from_twice(2 * k + 1), angle(la.column(k + 1) - (k + 1)));
    }
    return b;
}

namespace detail {

inline bool strict_run(const half_sequence& s, int first_twice) {
    int prev = -1;
    bool seen_zero = false;
    int last = s.empty() ? first_twice : std::max(first_twice, s.rbegin()->first.twice());
    for (int t = first_twice; t <= last + 2; t += 2) {
        int v = entry(s, half_int::from_twice(t));
        if (v < 0) return false;
        if (v == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) return false;
        if (prev != -1 && v >= prev) return false;
        prev = v;
    }
    return true;
}

inline bool zero_propagates(const half_sequence& s, int first_twice) {
    for (const auto& [r, v] : s) {
        if (r.twice() < first_twice) return false;
        half_int prev = r - half;
        if (prev.twice() >= first_twice && entry(s, prev) == 0) return false;
    }
    return true;
}

}  // namespace detail

// strict runs on both parities, and a_s = 0 forces a_{s+1/2} = 0
inline bool in_sp1(const half_sequence& a) {
    return detail::strict_run(a, 1) && detail::strict_run(a, 2) && detail::zero_propagates(a, 1);
}

inline bool in_sp2(const half_sequence& b) {
    return detail::strict_run(b, 0) && detail::strict_run(b, 1) && detail::zero_propagates(b, 0);
}

inline partition theta1_inverse(const half_sequence& a) {
    if (!in_sp1(a)) throw std::invalid_argument("theta1_inverse: sequence not in the image");
    int d = 0;
    while (entry(a, half_int::from_twice(2 * d + 1)) > 0) ++d;
    std::vector<int> cols(d), rows;
    for (int k = 1; k <= d; ++k) cols[k - 1] = entry(a, half_int::from_twice(2 * k - 1)) + k - 1;
    for (int k = 1; k <= d; ++k) rows.push_back(entry(a, half_int(k)) + k);
    for (int k = d + 1;; ++k) {
        int r = 0;
        for (int c : cols) r += c >= k;
        if (r == 0) break;
        rows.push_back(r);
    }
    partition la(rows);
    if (theta1(la) != a) throw std::invalid_argument("theta1_inverse: sequence not in the image");
    return la;
}

// theta2(la) is theta1(la') shifted down by 1/2
inline partition theta2_inverse(const half_sequence& b) {
    half_sequence a;
    for (const auto& [r, v] : b) a[r + half] = v;
    partition la = theta1_inverse(a).conjugate();
    if (theta2(la) != b) throw std::invalid_argument("theta2_inverse: sequence not in the image");
    return la;
}

// sum (-1)^{2r} a_r b_r
inline long form_s(const half_sequence& a, const half_sequence& b) {
    long s = 0;
    for (const auto& [r, v] : a) s += static_cast<long>(r.parity_sign()) * v * entry(b, r);
    return s;
}

// sum_{i>=1} l_i (l_i - 2i)
inline long form1(const partition& la) {
    long s = 0;
    for (int i = 1; i <= la.length(); ++i) s += static_cast<long>(la.part(i)) * (la.part(i) - 2 * i);
    return s;
}

// rows indexed from 0: sum_{i>=0} l_i (l_i - 2i)
inline long form2(const partition& la) {
    long s = 0;
    for (int i = 0; i < la.length(); ++i) s += static_cast<long>(la.part(i + 1)) * (la.part(i + 1) - 2 * i);
    return s;
}

// Replace the first column by m - l'_1.
inline partition tilde(const partition& la, int m) {
    if (la.column(1) + la.column(2) > m)
        throw std::invalid_argument("tilde: partition " + la.str() + " not admissible for m = " + std::to_string(m));
    std::vector<int> cols;
    cols.push_back(m - la.column(1));
    for (int j = 2; j <= la.part(1); ++j) cols.push_back(la.column(j));
    return partition(cols).conjugate();
}

inline bool in_orthogonal_range(const partition& la, int m) {
    return la.column(1) + la.column(2) <= m;
}

struct frobenius_coordinates {
    std::vector<int> arms;
    std::vector<int> legs;
    bool operator==(const frobenius_coordinates&) const = default;
};

inline frobenius_coordinates frobenius(const partition& la) {
    frobenius_coordinates f;
    for (int i = 1; la.part(i) >= i; ++i) {
        f.arms.push_back(la.part(i) - i);
        f.legs.push_back(la.column(i) - i);
    }
    return f;
}

inline partition from_frobenius(const frobenius_coordinates& f) {
    if (f.arms.size() != f.legs.size()) throw std::invalid_argument("from_frobenius: length mismatch");
    int d = static_cast<int>(f.arms.size());
    std::vector<int> rows, cols;
    for (int i = 0; i < d; ++i) {
        rows.push_back(f.arms[i] + i + 1);
        cols.push_back(f.legs[i] + i + 1);
    }
    for (int k = d + 1;; ++k) {
        int r = 0;
        for (int c : cols) r += c >= k;
        if (r == 0) break;
        rows.push_back(r);
    }
    partition la(rows);
    if (frobenius(la) != f) throw std::invalid_argument("from_frobenius: not valid coordinates");
    return la;
}

inline std::vector<partition> partitions_of(int n, int max_part = -1, int max_length = -1) {
    std::vector<partition> out;
    if (n < 0) return out;
    if (max_part < 0 || max_part > n) max_part = n;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

inline std::vector<partition> partitions_up_to(int n, int max_length = -1) {
    std::vector<partition> out;
    for (int k = 0; k <= n; ++k) {
        auto v = partitions_of(k, -1, max_length);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// generalized partitions of length ell with sum |lambda_i| <= n
inline std::vector<generalized_partition> generalized_partitions_up_to(int n, int ell) {
    std::vector<generalized_partition> out;
    for (int neg_len = 0; neg_len <= ell; ++neg_len) {
        for (const auto& pos : partitions_up_to(n, ell - neg_len)) {
            for (const auto& neg : partitions_up_to(n - pos.size(), neg_len)) {
                if (neg.length() != neg_len) continue;
                std::vector<int> v(ell, 0);
                for (int i = 0; i < pos.length(); ++i) v[i] = pos.parts()[i];
                for (int i = 0; i < neg.length(); ++i) v[ell - 1 - i] = -neg.parts()[i];
                out.emplace_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace klab
