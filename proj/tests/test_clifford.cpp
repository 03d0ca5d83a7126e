#include <catch2/catch_amalgamated.hpp>

#include <hhalg/clifford.hpp>

#include "helpers.hpp"

#include <map>
#include <vector>

using namespace hhalg;

namespace {

// Brute-force normal ordering, independent of the closed-form signs under
// test: theta_i applied to an ordered product of dual generators, using only
// the defining relation  theta_i del_j = -del_j theta_i + delta_ij  and the
// fact that a lone theta annihilates the vacuum of C[del].
std::map<std::vector<int>, long> brute_theta(int i, const std::vector<int>& duals) {
    std::map<std::vector<int>, long> out;
    if (duals.empty()) return out;
    std::vector<int> rest(duals.begin() + 1, duals.end());
    if (i == duals[0]) out[rest] += 1;
    for (const auto& [seq, c] : brute_theta(i, rest)) {
        std::vector<int> v{duals[0]};
        v.insert(v.end(), seq.begin(), seq.end());
        out[v] -= c;
    }
    return out;
}

// apply an ascending theta monomial, rightmost factor first
std::map<std::vector<int>, long> brute_wedge(const std::vector<int>& thetas,
                                             const std::vector<int>& duals) {
    std::map<std::vector<int>, long> cur;
    cur[duals] = 1;
    for (auto it = thetas.rbegin(); it != thetas.rend(); ++it) {
        std::map<std::vector<int>, long> next;
        for (const auto& [seq, c] : cur)
            for (const auto& [seq2, c2] : brute_theta(*it, seq)) next[seq2] += c * c2;
        for (auto i = next.begin(); i != next.end();)
            i = (i->second == 0) ? next.erase(i) : std::next(i);
        cur = std::move(next);
    }
    return cur;
}

std::vector<int> mask_to_list(Mask m) {
    std::vector<int> v;
    for (int i = 1; i <= 32 && (Mask(1) << (i - 1)) <= m; ++i)
        if (mask_has(m, i)) v.push_back(i);
    return v;
}

}  // namespace

TEST_CASE("contraction signs match brute-force normal ordering") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<Mask> masks(0, 255);
    for (int t = 0; t < 200; ++t) {
        Mask A = masks(rng), D = masks(rng);
        auto brute = brute_wedge(mask_to_list(A), mask_to_list(D));
        auto [res, sign] = contract_wedge(D, A);
        if (sign == 0) {
            CHECK(brute.empty());
        } else {
            REQUIRE(brute.size() == 1);
            const auto& [seq, c] = *brute.begin();
            CHECK(seq == mask_to_list(res));
            CHECK(c == sign);
        }
    }
}

TEST_CASE("full self-contraction sign") {
    // theta_S fed into del_S gives (-1)^(|S|(|S|-1)/2)
    for (Mask S : {Mask(0b1), Mask(0b11), Mask(0b111), Mask(0b1111), Mask(0b10110)}) {
        auto [res, sign] = contract_wedge(S, S);
        CHECK(res == 0);
        int k = mask_size(S);
        CHECK(sign == ((k * (k - 1) / 2) % 2 ? -1 : 1));
    }
}

TEST_CASE("exterior product signs match sequence sorting") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Mask> masks(0, 1023);
    for (int t = 0; t < 200; ++t) {
        Mask A = masks(rng), B = masks(rng);
        if (A & B) {
            continue;
        }
        std::vector<int> seq = mask_to_list(A);
        for (int i : mask_to_list(B)) seq.push_back(i);
        CHECK(merge_sign(A, B) == sequence_sort_sign(seq));
    }
    // anticommutativity of distinct generators
    auto F = make_cyclotomic_field(6);
    Wedge t1 = Wedge::single(mask_bit(1), Poly::constant(CycNum::rational(F, 1)));
    Wedge t2 = Wedge::single(mask_bit(2), Poly::constant(CycNum::rational(F, 1)));
    CHECK(t1 * t2 == t2 * t1 * Poly::constant(CycNum::rational(F, -1)));
    CHECK((t1 * t1).is_zero());
}

TEST_CASE("wedge algebra is associative on random elements") {
    std::mt19937_64 rng(43);
    auto F = make_cyclotomic_field(6);
    std::uniform_int_distribution<Mask> masks(0, 63);
    auto rand_wedge = [&]() {
        Wedge w;
        for (int k = 0; k < 4; ++k)
            w.add(masks(rng), Poly::constant(testutil::random_cyc(F, rng, 3)));
        return w;
    };
    for (int t = 0; t < 20; ++t) {
        Wedge a = rand_wedge(), b = rand_wedge(), c = rand_wedge();
        CHECK((a * b) * c == a * (b * c));
        CHECK(act(a, act(b, c)) == act(a * b, c));
    }
}

TEST_CASE("exponentials of commuting even elements") {
    auto F = make_cyclotomic_field(6);
    auto pairw = [&](int i, int j) {
        return Wedge::single(mask_bit(i), Poly::constant(CycNum::rational(F, 1))) *
               Wedge::single(mask_bit(j), Poly::constant(CycNum::rational(F, 1)));
    };
    Wedge H = pairw(1, 2) + pairw(3, 4);
    Wedge e = H.exp_even(F);
    Wedge expect = Wedge::unit(F) + H + pairw(1, 2) * pairw(3, 4);
    CHECK(e == expect);
    // exp(a+b) = exp(a) exp(b) for commuting even a, b
    CHECK(e == pairw(1, 2).exp_even(F) * pairw(3, 4).exp_even(F));
}

TEST_CASE("two-factor wedges multiply with the Koszul sign") {
    auto F = make_cyclotomic_field(6);
    Poly one = Poly::constant(CycNum::rational(F, 1));
    BiWedge x = BiWedge::single(0, mask_bit(1), one);   // 1 (x) theta_1
    BiWedge y = BiWedge::single(mask_bit(2), 0, one);   // theta_2 (x) 1
    BiWedge xy = x * y;
    REQUIRE(xy.parts().size() == 1);
    auto [key, p] = *xy.parts().begin();
    CHECK(key == BiWedge::Key{mask_bit(2), mask_bit(1)});
    CHECK(p == -one);
    CHECK((y * x).parts().begin()->second == one);

    // squares of diagonal pair terms vanish, cross terms commute
    BiWedge h1 = BiWedge::single(mask_bit(1), mask_bit(1), one);
    BiWedge h2 = BiWedge::single(mask_bit(2), mask_bit(2), one);
    CHECK((h1 * h1).is_zero());
    CHECK(h1 * h2 == h2 * h1);
}

TEST_CASE("pairing map on elementary inputs") {
    auto F = make_cyclotomic_field(6);
    Poly one = Poly::constant(CycNum::rational(F, 1));
    Wedge d1 = Wedge::single(mask_bit(1), one);
    Wedge d2 = Wedge::single(mask_bit(2), one);

    // (theta_1 (x) theta_1) against (del_1 (x) del_1): Koszul sign -1
    BiWedge H = BiWedge::single(mask_bit(1), mask_bit(1), one);
    Wedge r = upsilon(H, d1, d1);
    CHECK(r == Wedge::single(0, -one));

    // without overlap the factors pass through to an exterior product
    BiWedge empty = BiWedge::unit(F);
    CHECK(upsilon(empty, d1, d2) == d1 * d2);
    CHECK(upsilon(empty, d2, d1) == d2 * d1);
    CHECK(upsilon(H, d2, d2).is_zero());
}

TEST_CASE("cycle block wedges") {
    auto F = make_cyclotomic_field(12);
    // balanced 3-cycle with trivial phases: sum of the three hatted products
    auto g = analyze_sector(cycle_element(3, 4, {1, 2, 3}));
    Wedge w = dual_wedge_block(g, g.cycles[0], F);
    // terms: +del_2 del_3, -del_1 del_3, +del_1 del_2 (cycle order 1,2,3)
    CHECK(w.part(mask_of({2, 3})) == Poly::constant(CycNum::rational(F, 1)));
    CHECK(w.part(mask_of({1, 3})) == Poly::constant(CycNum::rational(F, -1)));
    CHECK(w.part(mask_of({1, 2})) == Poly::constant(CycNum::rational(F, 1)));

    // unbalanced cycle: one full product, cycle order (2 5 3) sorts with one swap
    auto u = cycle_element(4, 5, {2, 5, 3}) * diag_element(4, 5, {{2, 1}});
    auto g2 = analyze_sector(u);
    REQUIRE_FALSE(g2.cycles[0].balanced);
    Wedge w2 = dual_wedge_block(g2, g2.cycles[0], F);
    CHECK(w2.part(mask_of({2, 3, 5})) == Poly::constant(CycNum::rational(F, -1)));

    // block ordering by least slot: diag rest block between the two cycles
    auto v = cycle_element(4, 5, {1, 4}) * diag_element(4, 5, {{1, 2}, {2, 2}, {3, 1}});
    auto g3 = analyze_sector(v);
    Wedge w3 = dual_wedge_of_twist(g3, F);
    REQUIRE_FALSE(g3.cycles[0].balanced);
    // cycle block (1 4) then diag block (2 3): concatenation 1,4,2,3 sorts
    // with sign +1... check against the sequence sign directly
    CHECK(w3.part(mask_of({1, 2, 3, 4})) ==
          Poly::constant(CycNum::rational(F, sequence_sort_sign({1, 4, 2, 3}))));
}

TEST_CASE("eigen thetas pair dually with the block wedge transforms") {
    // the eigen theta and eigen dual-theta coordinate changes are mutually
    // inverse: contracting theta~_b against del~_b' gives the identity matrix
    std::mt19937_64 rng(44);
    for (auto [n, N] : {std::pair{3, 3}, {4, 4}}) {
        long L = n;
        for (int k = 2; k <= N; ++k) L = lcm_long(lcm_long(L, k), static_cast<long>(n) * k);
        auto F = make_cyclotomic_field(L);
        for (int t = 0; t < 4; ++t) {
            auto u = testutil::random_group_element(n, N, rng);
            auto g = analyze_sector(u);
            for (const auto& c : g.cycles) {
                long k = c.len();
                for (int b = 0; b < k; ++b)
                    for (int b2 = 0; b2 < k; ++b2) {
                        // dual eigen theta at position b: sum_a zeta_k^(ab) w_a^(-1) del_(slots[a])
                        Wedge dual;
                        for (int a = 0; a < k; ++a)
                            dual += Wedge::single(
                                mask_bit(c.slots[a]),
                                Poly::constant(cycle_weight(g, c, a, F).inverse() *
                                               root_of_unity(F, k, static_cast<long>(a) * b)));
                        Wedge th = theta_tilde(g, c.slots[b2], F);
                        Wedge paired = act(th, dual);
                        Poly expect = (b == b2) ? Poly::constant(CycNum::rational(F, 1)) : Poly::zero();
                        CHECK(paired.part(0) == expect);
                    }
            }
        }
    }
}
