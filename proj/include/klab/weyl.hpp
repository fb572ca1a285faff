#pragma once

#include "weights.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace klab {

// Realisation of W on the span of the epsilon_k: sigma_i (i != 0, or type a) swaps k = i, i+1;
// sigma_0 negates epsilon_1 in types b, c and sends epsilon_1 -> -epsilon_2, epsilon_2 -> -epsilon_1 in type d.
class signed_permutation {
public:
    struct image {
        int index;
        int sign;
        auto operator<=>(const image&) const = default;
    };

    image operator()(int k) const {
        auto it = moved_.find(k);
        return it == moved_.end() ? image{k, 1} : it->second;
    }

    image inverse(int k) const {
        for (const auto& [src, im] : moved_)
            if (im.index == k) return {src, im.sign};
        return {k, 1};
    }

    // sigma_i composed on the left
    signed_permutation left_multiply(lie_type t, int i) const {
        signed_permutation r;
        auto apply = [&](image im) -> image {
            if (t == lie_type::a || i >= 1) {
                if (im.index == i) return {i + 1, im.sign};
                if (im.index == i + 1) return {i, im.sign};
                return im;
            }
            if (t == lie_type::d) {
                if (im.index == 1) return {2, -im.sign};
                if (im.index == 2) return {1, -im.sign};
                return im;
            }
            if (im.index == 1) return {1, -im.sign};
            return im;
        };
        std::set<int> support;
        for (const auto& [k, im] : moved_) support.insert(k);
        // points mapped onto the affected indices
        for (int target : {i, i + 1, 1, 2}) support.insert(inverse(target).index);
        for (int k : support) {
            image im = apply((*this)(k));
            if (!(im.index == k && im.sign == 1)) r.moved_[k] = im;
        }
        return r;
    }

    // action on a root given as epsilon coordinates
    std::map<int, long> act(const std::map<int, long>& root) const {
        std::map<int, long> out;
        for (auto [k, c] : root) {
            image im = (*this)(k);
            out[im.index] += c * im.sign;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    std::map<int, long> act_inverse(const std::map<int, long>& root) const {
        std::map<int, long> out;
        for (auto [k, c] : root) {
            image im = inverse(k);
            out[im.index] += c * im.sign;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    const std::map<int, image>& moved() const { return moved_; }
    bool operator==(const signed_permutation&) const = default;
    bool operator<(const signed_permutation& o) const { return moved_ < o.moved_; }

    int min_support() const { return moved_.empty() ? 1 : moved_.begin()->first; }
    int max_support() const { return moved_.empty() ? 0 : moved_.rbegin()->first; }

private:
    std::map<int, image> moved_;
};

// a root is positive iff its coefficient at the largest index with nonzero coefficient is negative
inline bool is_positive_root(const std::map<int, long>& root) {
    if (root.empty()) throw std::logic_error("zero root");
    return root.rbegin()->second < 0;
}

// w = sigma_{word[0]} ... sigma_{word[k-1]}, and u = w^{-1} realised as a signed permutation
struct coset_rep {
    std::vector<int> word;
    signed_permutation inverse;
    int length() const { return static_cast<int>(word.size()); }
};

namespace detail {

inline std::vector<std::vector<coset_rep>>& w0_cache(lie_type t) {
    static std::vector<std::vector<coset_rep>> cache[4];
    return cache[static_cast<int>(t)];
}

inline std::mutex& w0_mutex() {
    static std::mutex m;
    return m;
}

inline bool is_simple_nonzero(lie_type t, const std::map<int, long>& root) {
    if (root.size() != 2) return false;
    auto a = *root.begin(), b = *root.rbegin();
    if (!(a.second == 1 && b.second == -1 && b.first == a.first + 1)) return false;
    return t == lie_type::a ? a.first != 0 : a.first >= 1;
}

}  // namespace detail

// Minimal length coset representatives of W_0 \ W, grouped by length 0..k_max.
// BFS on u = w^{-1}: sigma_i u is kept when u^{-1}(alpha_i) > 0 and u^{-1}(alpha_i) is not a simple root of W_0.
inline std::vector<std::vector<coset_rep>> enumerate_w0(lie_type t, int k_max) {
    if (k_max < 0) throw std::invalid_argument("enumerate_w0: k_max must be >= 0");
    std::lock_guard<std::mutex> lock(detail::w0_mutex());
    auto& levels = detail::w0_cache(t);
    if (levels.empty()) levels.push_back({coset_rep{}});
    while (static_cast<int>(levels.size()) <= k_max) {
        std::vector<coset_rep> next;
        std::set<signed_permutation> seen;
        for (const auto& w : levels.back()) {
            const auto& u = w.inverse;
            int lo = std::min(u.min_support(), 1) - 1;
            int hi = std::max(u.max_support(), 1) + 1;
            if (t != lie_type::a) lo = 0;
            for (int i = lo; i <= hi; ++i) {
                auto pre = u.act_inverse(simple_root(t, i));
                if (!is_positive_root(pre)) continue;
                if (detail::is_simple_nonzero(t, pre)) continue;
                signed_permutation v = u.left_multiply(t, i);
                if (!seen.insert(v).second) continue;
                coset_rep r{w.word, v};
                r.word.push_back(i);
                next.push_back(std::move(r));
            }
        }
        levels.push_back(std::move(next));
    }
    return {levels.begin(), levels.begin() + k_max + 1};
}

// w . mu = w(mu + rho) - rho, applied letter by letter from the right
inline weight dot_action(const coset_rep& w, const weight& mu) {
    weight out = mu;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = dot_reflect(out, *it);
    return out;
}

struct partition_pair {
    partition plus;
    partition minus;
    bool operator==(const partition_pair&) const = default;
};

// Type a: (lambda^+_w, lambda^-_w); other types: lambda_w in `plus`.  Throws if the blocks are not partitions.
inline partition_pair extract_partitions(const weight& mu) {
    if (mu.algebra().t == lie_type::a) return {positive_block(mu), negative_block(mu)};
    for (const auto& [r, c] : mu.coords())
        if (r.as_int() <= 0) throw std::invalid_argument("extract_partitions: non-positive index in " + mu.str());
    return {positive_block(mu), partition()};
}

}  // namespace klab
