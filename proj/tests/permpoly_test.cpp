/*
   Copyright 2026 The ffperm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <ffperm/character.hpp>
#include <ffperm/permpoly.hpp>
#include <ffperm/polynomial.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

namespace ffperm {
namespace {

SparsePoly poly(const Field& f, std::initializer_list<std::pair<Element, std::uint64_t>> terms) {
    std::vector<Term> t;
    for (auto [c, e] : terms) t.push_back({c, Natural(e)});
    return SparsePoly{f, t};
}

template <class R>
std::vector<Element> collect(R&& range) {
    std::vector<Element> out;
    for (Element x : range) out.push_back(x);
    return out;
}

SparsePoly x_pow(const Field& f, std::uint64_t e) { return SparsePoly::monomial(f, f.one(), Natural(e)); }

// f(x) by naive arithmetic: every power is a loop of multiplications
std::vector<std::uint64_t> naive_table(const Field& f, const SparsePoly& sp) {
    const oracle::NaiveField nf(f.p(), f.modulus());
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < f.q(); ++x) {
        std::uint64_t acc = 0;
        for (const auto& t : sp.terms()) {
            const auto e = t.exp.convert_to<std::uint64_t>();
            acc = nf.add(acc, nf.mul(t.coef.index(), nf.pow(x, e)));
        }
        out.push_back(acc);
    }
    return out;
}

SparsePoly random_trinomial(const Field& f, std::mt19937_64& rng, std::uint64_t max_exp) {
    std::uniform_int_distribution<std::uint64_t> coef(1, f.q() - 1), exp(1, max_exp);
    std::vector<Term> t;
    for (int i = 0; i < 3; ++i) t.push_back({Element{static_cast<std::uint32_t>(coef(rng))}, Natural(exp(rng))});
    return SparsePoly{f, t};
}

TEST(SparsePoly, MergesAndDropsZeroTerms) {
    const Field f = Field::build(2, 3);
    const Element one = f.one();
    const SparsePoly a = poly(f, {{one, 3}, {one, 1}, {one, 3}});
    ASSERT_EQ(a.terms().size(), 1u);
    EXPECT_EQ(a.terms()[0].exp, 1);
    EXPECT_TRUE(poly(f, {{f.zero(), 5}}).is_zero());
    const SparsePoly b = poly(f, {{one, 9}, {one, 2}});
    EXPECT_EQ(b.terms()[0].exp, 2);
    EXPECT_EQ(plus_x(f, x_pow(f, 1)), SparsePoly{});
}

TEST(Eval, Examples) {
    const Field f8 = Field::build(2, 3);
    EXPECT_EQ(eval(f8, x_pow(f8, 5), f8.zero()), f8.zero());
    EXPECT_EQ(eval(f8, poly(f8, {{f8.one(), 1}, {f8.one(), 3}}), f8.one()), f8.zero());
    EXPECT_EQ(eval(f8, poly(f8, {{f8.one(), 0}}), f8.zero()), f8.one());

    const Field f27 = Field::build(3, 3);
    const SparsePoly c5 = poly(f27, {{f27.from_int(2), 1}, {f27.one(), 5}, {f27.one(), 15}});
    const auto expected = naive_table(f27, c5);
    for (Element x : f27.elements()) ASSERT_EQ(eval(f27, c5, x).index(), expected[x.index()]);
}

TEST(Eval, HugeExponentsReduce) {
    const Field f = Field::build(3, 3);
    const SparsePoly big = SparsePoly::monomial(f, f.one(), natural_pow(3, 30) * 26 + 5);
    for (Element x : f.elements()) ASSERT_EQ(eval(f, big, x), f.pow(x, std::uint64_t{5}));
}

TEST(Tabulate, Examples) {
    const Field f4 = Field::build(2, 2);
    const auto id = tabulate(f4, x_pow(f4, 1));
    for (std::uint32_t i = 0; i < 4; ++i) EXPECT_EQ(id.table[i], i);
    const auto zero = tabulate(f4, SparsePoly{});
    for (auto v : zero.table) EXPECT_EQ(v, 0u);
    EXPECT_TRUE(tabulate(f4, x_pow(f4, 2)).is_bijective());
}

TEST(IsPermutation, Examples) {
    const Field f9 = Field::build(3, 2);
    EXPECT_TRUE(is_permutation(f9, x_pow(f9, 1)));
    EXPECT_FALSE(is_permutation(f9, x_pow(f9, 2)));
    EXPECT_TRUE(is_permutation(f9, x_pow(f9, 5)));
    // monomials: PP iff gcd(d, q-1) = 1
    for (std::uint64_t d = 1; d < 40; ++d)
        EXPECT_EQ(is_permutation(f9, x_pow(f9, d)), std::gcd(d, std::uint64_t{8}) == 1) << d;
}

TEST(IsPermutation, MatchesNaiveImage) {
    std::mt19937_64 rng(3);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {5, 2}, {2, 5}, {7, 2}}) {
        const Field f = Field::build(p, n);
        for (int t = 0; t < 40; ++t) {
            const SparsePoly g = random_trinomial(f, rng, 3 * f.q());
            ASSERT_EQ(is_permutation(f, g), oracle::bijective(naive_table(f, g))) << g.to_string(f);
        }
    }
}

TEST(IsCpp, Examples) {
    const Field f4 = Field::build(2, 2);
    EXPECT_FALSE(is_cpp(f4, SparsePoly{}));
    EXPECT_FALSE(is_cpp(f4, x_pow(f4, 1)));

    const Field f9 = Field::build(3, 2);
    int hits = 0;
    for (Element g : f9.nonzero_elements()) {
        if (f9.mul(g, g) != f9.neg(f9.one())) continue;
        ++hits;
        EXPECT_TRUE(is_cpp(f9, SparsePoly::monomial(f9, f9.inv(g), Natural(5))));
    }
    EXPECT_EQ(hits, 2);
}

TEST(IsCppExponent, Examples) {
    const Field f4 = Field::build(2, 2);
    EXPECT_FALSE(is_cpp_exponent(f4, Natural(1), f4.one()));
    try {
        is_cpp_exponent(f4, Natural(1), f4.zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroCoefficient);
    }
    // non-cubic elements of F_4* inside F_16, d = 16
    const Field f16 = Field::build(2, 4);
    int noncubic = 0;
    for (Element a : f16.nonzero_elements()) {
        if (!f16.in_subfield(a, 2) || a == f16.one()) continue;
        ++noncubic;
        EXPECT_TRUE(is_cpp_exponent(f16, Natural(16), a));
    }
    EXPECT_EQ(noncubic, 2);
    // gcd(d, q-1) != 1 is never a CPP exponent
    EXPECT_FALSE(is_cpp_exponent(f16, Natural(3), f16.generator()));
}

TEST(PpViaCharsum, Examples) {
    const Field f8 = Field::build(2, 3);
    EXPECT_TRUE(pp_via_charsum(f8, x_pow(f8, 1)));
    const Field f9 = Field::build(3, 2);
    EXPECT_FALSE(pp_via_charsum(f9, x_pow(f9, 2)));
    try {
        const Field big = Field::build(2, 17);
        pp_via_charsum(big, x_pow(big, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FieldTooLargeForCharsumCheck);
    }
}

TEST(PpViaCharsum, AgreesWithImageCheckOnRandomTrinomials) {
    std::mt19937_64 rng(16);
    const Field f16 = Field::build(2, 4);
    int pps = 0;
    for (int t = 0; t < 50; ++t) {
        const SparsePoly g = random_trinomial(f16, rng, 64);
        const bool pp = is_permutation(f16, g);
        pps += pp;
        ASSERT_EQ(pp_via_charsum(f16, g), pp) << g.to_string(f16);
    }
    // plus a batch that is guaranteed to contain permutations
    for (std::uint64_t d : {1u, 2u, 4u, 7u, 8u, 11u, 13u, 14u}) {
        const SparsePoly m = x_pow(f16, d);
        ASSERT_EQ(pp_via_charsum(f16, m), is_permutation(f16, m));
    }
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 3}, {5, 2}, {7, 2}}) {
        const Field f = Field::build(p, n);
        for (int t = 0; t < 15; ++t) {
            const SparsePoly g = random_trinomial(f, rng, 2 * f.q());
            ASSERT_EQ(pp_via_charsum(f, g), is_permutation(f, g));
        }
    }
    (void)pps;
}

TEST(PermutationClosure, ScalingPreservesPermutations) {
    const Field f = Field::build(3, 3);
    const SparsePoly g = poly(f, {{f.from_int(2), 1}, {f.one(), 5}, {f.one(), 15}});
    ASSERT_TRUE(is_permutation(f, g));
    for (Element c : f.nonzero_elements()) {
        ASSERT_TRUE(is_permutation(f, g.scaled(f, c)));
        SparsePoly inner;
        for (const auto& t : g.terms()) inner.add_term(f, f.mul(t.coef, f.pow(c, t.exp)), t.exp);
        ASSERT_TRUE(is_permutation(f, inner));
    }
}

TEST(Character, Basics) {
    const Field f9 = Field::build(3, 2);
    EXPECT_EQ(chi(f9, f9.zero()), CycInt::integer(3, 1));
    for (Element x : f9.elements())
        for (Element y : f9.elements()) ASSERT_EQ(chi(f9, x) * chi(f9, y), chi(f9, f9.add(x, y)));

    const Field f8 = Field::build(2, 3);
    EXPECT_TRUE(weil_sum_fn(f8, [](Element x) { return x; }).value.is_zero());
    EXPECT_EQ(weil_sum(f8, SparsePoly{}).value, CycInt::integer(2, 8));
    EXPECT_EQ(weil_sum(f8, SparsePoly{}).terms, 8u);
}

TEST(Character, Orthogonality) {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {5, 2}, {3, 3}, {7, 1}}) {
        const Field f = Field::build(p, n);
        for (Element a : f.elements()) {
            const auto s = weil_sum(f, SparsePoly::monomial(f, a, Natural(1))).value;
            if (a.is_zero())
                ASSERT_EQ(s, CycInt::integer(p, static_cast<std::int64_t>(f.q())));
            else
                ASSERT_TRUE(s.is_zero());
        }
    }
}

TEST(Character, ConstantSums) {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 10}, {3, 4}, {5, 3}}) {
        const Field f = Field::build(p, n);
        for (Element c : f.elements()) {
            const auto s = weil_sum(f, SparsePoly::monomial(f, c, Natural(0))).value;
            ASSERT_EQ(s, CycInt::root_power(p, f.abs_trace(c)).scale(static_cast<std::int64_t>(f.q())));
        }
    }
}

TEST(Character, WeilSumMatchesNaiveHistogram) {
    std::mt19937_64 rng(5);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 6}, {3, 3}, {5, 2}, {7, 2}}) {
        const Field f = Field::build(p, n);
        const oracle::NaiveField nf(p, f.modulus());
        for (int t = 0; t < 10; ++t) {
            const SparsePoly g = random_trinomial(f, rng, f.q());
            EXPECT_EQ(weil_sum(f, g).value.coords(), oracle::weil_sum(nf, naive_table(f, g)));
            EXPECT_EQ(weil_sum(f, g, 4).value, weil_sum(f, g, 1).value);
        }
    }
}

TEST(Agw, IdentityMaps) {
    const Field f4 = Field::build(2, 2);
    const auto dom = collect(f4.elements());
    auto id = [](Element x) { return x; };
    const auto rep = agw_verify(agw_maps_from_functions(dom, id, id, id, id));
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.details["f_bijective"].get<bool>());
    EXPECT_TRUE(rep.details["h_bijective"].get<bool>());
}

TEST(Agw, SquareTwistInstance) {
    const Field f9 = Field::build(3, 2);
    const auto dom = collect(f9.nonzero_elements());
    int nonsquares = 0;
    for (Element c : f9.nonzero_elements()) {
        if (f9.pow(c, std::uint64_t{4}) == f9.one()) continue;
        ++nonsquares;
        auto fx = [&](Element x) { return f9.mul(x, f9.sub(f9.mul(x, x), c)); };
        auto lam = [&](Element x) { return f9.sub(f9.mul(x, x), c); };
        auto lambar = [&](Element x) { return f9.mul(x, x); };
        auto h = [&](Element s) { return f9.mul(f9.add(s, c), f9.mul(s, s)); };
        const auto rep = agw_verify(agw_maps_from_functions(dom, fx, lam, lambar, h));
        EXPECT_TRUE(rep.ok());
        EXPECT_TRUE(rep.details["f_bijective"].get<bool>());
        EXPECT_TRUE(rep.details["h_bijective"].get<bool>());
        EXPECT_TRUE(rep.details["fibers_injective"].get<bool>());
    }
    EXPECT_EQ(nonsquares, 4);
}

TEST(Agw, RejectsBrokenHypotheses) {
    AgwMaps m;
    m.f = {0, 0, 0};
    m.lam = {0, 1, 2};
    m.lambar = {0, 1, 2};
    m.h = {0, 1, 2};
    m.s_size = m.sbar_size = 3;
    try {
        agw_verify(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DiagramDoesNotCommute);
    }
    // a constant map that does commute: both sides false
    m.lambar = {0, 0, 0};
    m.lam = {0, 0, 0};
    m.h = {0};
    m.s_size = m.sbar_size = 1;
    const auto rep = agw_verify(m);
    EXPECT_TRUE(rep.ok());
    EXPECT_FALSE(rep.details["f_bijective"].get<bool>());
    m.s_size = 2;
    try {
        agw_verify(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SizeMismatch);
    }
    m.s_size = m.sbar_size = 2;
    m.h = {0, 1};
    try {
        agw_verify(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSurjective);
    }
}

TEST(HaReduce, Examples) {
    const Field big = Field::build(3, 2), small = Field::build(3, 1);
    const SubfieldEmbedding emb(small, big);
    const Element minus_one = big.neg(big.one());
    for (Element a : big.nonzero_elements()) {
        if (big.mul(a, a) != minus_one) continue;
        // x (x + a)(x + a^3) = x (x^2 - a^2) = x^3 + x
        EXPECT_EQ(h_a_reduce(big, small, emb, a), poly(small, {{small.one(), 1}, {small.one(), 3}}));
    }
    // a = 1: x (x + 1)^2 = x^3 + 2x^2 + x
    EXPECT_EQ(h_a_reduce(big, small, emb, big.one()),
              poly(small, {{small.one(), 1}, {small.from_int(2), 2}, {small.one(), 3}}));
    // coefficients are symmetric in the conjugates of a, so always in F_3
    EXPECT_EQ(h_a_reduce(big, small, emb, big.generator()).terms().size(), 3u);
    EXPECT_THROW(h_a_reduce(big, small, emb, big.zero()), Error);
}

TEST(HaReduce, ShapeForMinusOneCoset) {
    // a^{p^k - 1} = -1 gives h_a = x (x^2 - a^2)^{(p-1)/2}
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {5, 1}, {3, 2}}) {
        const unsigned r = p - 1;
        const Field big = Field::build(p, r * k), small = Field::build(p, k);
        const SubfieldEmbedding emb(small, big);
        const Element minus_one = big.neg(big.one());
        int seen = 0;
        for (Element a : big.nonzero_elements()) {
            if (big.pow(a, ipow(p, k) - 1) != minus_one) continue;
            ++seen;
            const Element a2 = *emb.to_small(big.mul(a, a));
            const DensePoly quad{small.neg(a2), small.zero(), small.one()};
            const SparsePoly expect = to_sparse(small, dense_mul(small, {small.zero(), small.one()},
                                                                 dense_pow(small, quad, (p - 1) / 2)));
            ASSERT_EQ(h_a_reduce(big, small, emb, a), expect);
            if (seen > 20) break;
        }
        EXPECT_GT(seen, 0);
    }
}

TEST(HxEquivalence, DeskScaleInstances) {
    for (auto [p, r, k] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{3, 2, 1}, {2, 3, 1}, {3, 2, 2}}) {
        const auto rep = verify_hx_equivalence(p, r, k);
        EXPECT_TRUE(rep.ok()) << rep.to_json().dump();
        EXPECT_GT(rep.checked, 0u);
        EXPECT_EQ(rep.checked + rep.skipped, ipow(p, r * k) - 1);
    }
    EXPECT_EQ(hx_exponent(3, 2, 1), 5);
    EXPECT_EQ(hx_exponent(3, 2, 2), 11);
    EXPECT_THROW(verify_hx_equivalence(2, 17, 1), Error);
}

TEST(FrobeniusPlusX, OddQuotientPermutes) {
    for (auto [p, m, k] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{3, 3, 1}, {3, 3, 2}, {5, 3, 1}, {3, 5, 1}}) {
        const auto rep = verify_frobenius_plus_x(p, m, k);
        EXPECT_TRUE(rep.ok());
        EXPECT_EQ(rep.checked, 1u);
    }
    // even quotient: x^3 + x over F_9 has the kernel {x : x^2 = -1}
    const auto rep = verify_frobenius_plus_x(3, 2, 1);
    EXPECT_EQ(rep.checked, 0u);
    EXPECT_FALSE(rep.details["permutation"].get<bool>());
}

}  // namespace
}  // namespace ffperm
