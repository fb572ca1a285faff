#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace klab;

namespace {

std::vector<dual_pair> all_pairs(int ell) {
    std::vector<dual_pair> out;
    for (side s : {side::classical, side::super})
        for (pair_kind k : {pair_kind::a, pair_kind::b, pair_kind::c, pair_kind::d_even, pair_kind::d_odd})
            out.push_back(dual_pair{s, k, ell});
    out.push_back(dual_pair{side::negative, pair_kind::a, ell});
    return out;
}

template <class F>
series substitute(const series& s, F&& f) {
    return s.map_monomials([&](const monomial& m) {
        monomial out;
        for (const auto& en : m.entries()) out = out * f(variable::unpack(en.var), en.exp);
        return out;
    });
}

}  // namespace

TEST(Fock, Examples) {
    const truncation t{1, 1};
    series expect = series::constant(1, t);
    expect.add_term(monomial::x(1) * monomial::z(1), 1);
    expect.add_term(monomial::x(0, -1) * monomial::z(1, -1), 1);
    EXPECT_EQ(fock_char(dual_pair{side::classical, pair_kind::a, 1}, t), expect);
    EXPECT_EQ(fock_char(dual_pair{side::negative, pair_kind::a, 1}, t), expect);
    for (int ell = 1; ell <= 3; ++ell)
        EXPECT_EQ(fock_char(dual_pair{side::super, pair_kind::a, ell}, truncation{3, 0}),
                  series::constant(1, truncation{3, 0}));
    EXPECT_THROW(fock_char(dual_pair{}, truncation::none()), std::invalid_argument);
}

TEST(Fock, PinPrefactorAtDepthZero) {
    series s = fock_char(dual_pair{side::classical, pair_kind::b, 1}, truncation{2, 0});
    series expect(truncation{2, 0});
    expect.add_term(monomial::z(1, half), 1);
    expect.add_term(monomial::z(1, -half), 1);
    EXPECT_EQ(s, expect);
}

TEST(Fock, OddOrthogonalDepthOne) {
    // (1 + eps x_1 z)(1 + eps x_1 / z)(1 + eps x_1) at depth 1
    const truncation t{1, 1};
    series s = fock_char(dual_pair{side::classical, pair_kind::d_odd, 1}, t);
    const monomial e = monomial::eps(), x = monomial::x(1);
    series expect = series::constant(1, t);
    expect.add_term(e * x * monomial::z(1), 1);
    expect.add_term(e * x * monomial::z(1, -1), 1);
    expect.add_term(e * x, 1);
    EXPECT_EQ(s, expect);
}

TEST(Fock, PairNames) {
    EXPECT_EQ(dual_pair::parse("d-odd-super", 2).size(), 5);
    EXPECT_EQ(dual_pair::parse("a-negative", 1).name(), "a-negative");
    EXPECT_THROW(dual_pair::parse("c-negative", 1), std::invalid_argument);
    EXPECT_THROW(dual_pair::parse("e", 1), std::invalid_argument);
    EXPECT_EQ(dual_pair::for_type(side::super, lie_type::d, 4).kind, pair_kind::d_even);
    EXPECT_THROW(dual_pair::for_type(side::classical, lie_type::d, 1), std::invalid_argument);
}

TEST(Fock, SpecializationCoherence) {
    for (int ell = 1; ell <= 2; ++ell) {
        for (const auto& p : all_pairs(ell)) {
            for (int N = 2; N <= 4; ++N) {
                const int D = ell == 1 ? 6 : 5;
                const truncation big{N, D}, small{N - 1, D};
                EXPECT_EQ(fock_char(p, big).truncated(small), fock_char(p, small)) << p.name() << " ell=" << ell << " N=" << N;
            }
        }
    }
}

TEST(Fock, ZSymmetry) {
    const truncation t{3, 5};
    for (int ell = 1; ell <= 2; ++ell) {
        for (side s : {side::classical, side::super}) {
            for (pair_kind k : {pair_kind::b, pair_kind::c, pair_kind::d_even, pair_kind::d_odd}) {
                const dual_pair p{s, k, ell};
                const series f = fock_char(p, t);
                for (int v = 1; v <= ell; ++v) {
                    auto flip = substitute(f, [&](variable var, int e) {
                        if (var.kind == alphabet::z && var.index == half_int(v)) return monomial::power(var, -e);
                        return monomial::power(var, e);
                    });
                    EXPECT_EQ(flip, f) << p.name() << " z" << v;
                }
                if (ell == 2) {
                    auto swap = substitute(f, [&](variable var, int e) {
                        if (var.kind == alphabet::z) return monomial::power(variable::z(3 - var.index.as_int()), e);
                        return monomial::power(var, e);
                    });
                    EXPECT_EQ(swap, f) << p.name();
                }
            }
        }
    }
}

// setting eps = 1 leaves the even orthogonal factors times prod (1 + x_n) / prod (1 - x_r)
TEST(Fock, EpsilonConsistency) {
    for (int D = 0; D <= 5; ++D) {
        const truncation t{3, D};
        for (side s : {side::classical, side::super}) {
            for (int ell = 1; ell <= 2; ++ell) {
                series odd = substitute(fock_char(dual_pair{s, pair_kind::d_odd, ell}, t), [](variable var, int e) {
                    return var.kind == alphabet::eps ? monomial() : monomial::power(var, e);
                });
                series expect = fock_char(dual_pair{s, pair_kind::d_even, ell}, t);
                for (int n = 1; n <= 3; ++n) {
                    expect.mul_binomial(monomial::x(n), +1);
                    if (s == side::super) expect.mul_geometric(monomial::x(half_int::from_twice(2 * n - 1)), +1);
                }
                EXPECT_EQ(odd, expect) << to_string(s) << " ell=" << ell << " D=" << D;
            }
        }
    }
}

// GL-dual pair: coefficient of z^mu collects Schur-function products; at ell = 1 the
// classical Fock character is sum_{a-b = n} e_a(x_{>0}) e_b(x_{<=0}^{-1}) z^n
TEST(Fock, ClassicalTypeAOneCopy) {
    const truncation t{3, 5};
    series f = fock_char(dual_pair{side::classical, pair_kind::a, 1}, t);
    series expect(t);
    auto ep = elementary(alphabets::int_pos(3), 5, t);
    auto en = elementary(alphabets::int_nonpos_inv(3), 5, t);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b) expect += (ep[a] * en[b]).times_monomial(monomial::z(1, a - b));
    EXPECT_EQ(f, expect);
}

TEST(Fock, DepthComponents) {
    const truncation t0{3, 0};
    auto one = depth_components(series::constant(1, t0));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.begin()->first, 0);

    const truncation t{1, 1};
    series f = fock_char(dual_pair{side::classical, pair_kind::a, 1}, t);
    auto parts = depth_components(f);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts.at(0), series::constant(1, t));
    EXPECT_EQ(parts.at(1).size(), 2u);

    const truncation big{2, 4};
    series g = fock_char(dual_pair{side::super, pair_kind::c, 2}, big);
    series sum(big);
    for (const auto& [d, c] : depth_components(g)) {
        for (const auto& [m, coeff] : c.terms()) EXPECT_EQ(m.depth(), d);
        sum += c;
    }
    EXPECT_EQ(sum, g);
}
