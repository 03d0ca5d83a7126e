#include <catch2/catch_amalgamated.hpp>

#include <hhalg/polyring.hpp>

#include "helpers.hpp"

using namespace hhalg;
using testutil::random_cyc;
using testutil::random_poly;

namespace {

Poly partial_derivative(const Poly& f, VarId v) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm;
        for (const auto& [w, ew] : m.terms())
            dm = dm * Monomial::var(w, w == v ? ew - 1 : ew);
        r.add_term(dm, c * Rat(e));
    }
    return r;
}

// rename every X variable to the given kind, same index
Poly to_kind(const Poly& f, VarKind k) {
    return f.rename([k](VarId v) { return VarId{v.kind == VarKind::X ? k : v.kind, v.idx}; });
}

// view f as univariate in `v` with polynomial coefficients
std::map<int, Poly> coeffs_in(const Poly& f, VarId v) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        Monomial rest;
        for (const auto& [w, ew] : m.terms())
            if (!(w == v)) rest = rest * Monomial::var(w, ew);
        out[e].add_term(rest, c);
    }
    return out;
}

// divide g by (yi - zi) exactly via synthetic division in yi;
// independent of the closed-form construction under test
Poly divide_by_linear(const Poly& g, VarId yi, VarId zi, const FieldPtr& F) {
    auto a = coeffs_in(g, yi);
    int top = 0;
    for (auto& [e, p] : a) top = std::max(top, e);
    Poly quotient, carry;  // carry = a_k + z*carry_prev, processed from the top down
    for (int k = top; k >= 1; --k) {
        Poly ak = carry;
        auto it = a.find(k);
        if (it != a.end()) ak += it->second;
        quotient += ak * Poly::monomial(Monomial::var(yi, k - 1), CycNum::rational(F, 1));
        carry = ak * Poly::var(zi, F);
    }
    Poly rem = carry;
    auto it0 = a.find(0);
    if (it0 != a.end()) rem += it0->second;
    REQUIRE(rem.is_zero());
    return quotient;
}

}  // namespace

TEST_CASE("polynomial ring axioms") {
    std::mt19937_64 rng(11);
    auto F = make_cyclotomic_field(12);
    for (int t = 0; t < 10; ++t) {
        Poly a = random_poly(F, rng, 3, 3, 4);
        Poly b = random_poly(F, rng, 3, 3, 4);
        Poly c = random_poly(F, rng, 3, 3, 4);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Poly::zero());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(12);
    auto F = make_cyclotomic_field(12);
    std::map<VarId, Poly> repl;
    repl[xvar(1)] = random_poly(F, rng, 2, 2, 3);
    repl[xvar(2)] = Poly::var(xvar(3), F) * CycNum::zeta(F, 5);
    for (int t = 0; t < 8; ++t) {
        Poly a = random_poly(F, rng, 3, 3, 4);
        Poly b = random_poly(F, rng, 3, 3, 4);
        CHECK((a * b).subst(repl) == a.subst(repl) * b.subst(repl));
        CHECK((a + b).subst(repl) == a.subst(repl) + b.subst(repl));
    }
}

TEST_CASE("difference quotients telescope f(Y)-f(Z)") {
    std::mt19937_64 rng(13);
    auto F = make_cyclotomic_field(12);
    const int nvars = 3;
    for (int t = 0; t < 8; ++t) {
        Poly f = random_poly(F, rng, nvars, 4, 5);
        Poly lhs = to_kind(f, VarKind::Y) - to_kind(f, VarKind::Z);
        Poly rhs;
        for (int i = 1; i <= nvars; ++i) {
            Poly di = difference_quotient(f, VarKind::X, i, VarKind::Y, VarKind::Z);
            rhs += (Poly::var({VarKind::Y, i}, F) - Poly::var({VarKind::Z, i}, F)) * di;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("difference quotient specializes to the partial derivative on the diagonal") {
    std::mt19937_64 rng(14);
    auto F = make_cyclotomic_field(6);
    for (int t = 0; t < 8; ++t) {
        Poly f = random_poly(F, rng, 3, 4, 5);
        for (int i = 1; i <= 3; ++i) {
            Poly di = difference_quotient(f, VarKind::X, i, VarKind::Y, VarKind::Z);
            std::map<VarId, Poly> diag;
            for (int j = 1; j <= 3; ++j) {
                diag[{VarKind::Y, j}] = Poly::var(xvar(j), F);
                diag[{VarKind::Z, j}] = Poly::var(xvar(j), F);
            }
            CHECK(di.subst(diag) == partial_derivative(f, xvar(i)));
        }
    }
}

TEST_CASE("closed-form difference quotient agrees with exact long division") {
    std::mt19937_64 rng(15);
    auto F = make_cyclotomic_field(12);
    const int nvars = 3;
    for (int t = 0; t < 6; ++t) {
        Poly f = random_poly(F, rng, nvars, 4, 5);
        for (int i = 1; i <= nvars; ++i) {
            // numerator of the telescoping slot: mixed substitution minus the
            // one-step-further substitution
            std::map<VarId, Poly> hi, lo;
            for (int j = 1; j <= nvars; ++j) {
                VarKind hk = (j < i) ? VarKind::Z : VarKind::Y;
                VarKind lk = (j <= i) ? VarKind::Z : VarKind::Y;
                hi[xvar(j)] = Poly::var({hk, j}, F);
                lo[xvar(j)] = Poly::var({lk, j}, F);
            }
            Poly numerator = f.subst(hi) - f.subst(lo);
            Poly oracle = divide_by_linear(numerator, {VarKind::Y, i}, {VarKind::Z, i}, F);
            CHECK(oracle == difference_quotient(f, VarKind::X, i, VarKind::Y, VarKind::Z));
        }
    }
}

TEST_CASE("monomial bookkeeping") {
    auto F = make_cyclotomic_field(6);
    Poly f = Poly::monomial(Monomial::var(xvar(1), 3) * Monomial::var(xvar(2), 1),
                            CycNum::rational(F, 2)) +
             Poly::monomial(Monomial::var(xvar(2), 5), CycNum::zeta(F, 1));
    CHECK(f.total_degree() == 5);
    CHECK(f.drop_high_powers(5, VarKind::X).term_count() == 1);
    CHECK(f.drop_high_powers(3, VarKind::X).is_zero());
    CHECK(f.is_homogeneous() == false);
    CHECK((f * f).coefficient(Monomial::var(xvar(2), 10)) == CycNum::zeta(F, 2));
}
