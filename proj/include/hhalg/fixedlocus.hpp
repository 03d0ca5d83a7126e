#pragma once

// Per-twist coordinate geometry.
//
// A group element u acts on coordinates by x_k -> zeta^(d_k) x_(sigma(k)).
// This module splits the N slots into blocks (fixed slots with or without a
// diagonal phase; permutation cycles whose total phase is trivial, here
// called balanced, or nontrivial), builds the eigenbasis of the action, and
// provides the restriction to the fixed subspace together with its monomial
// basis. The eigen coordinate attached to position b of a cycle sits at the
// variable slot of that position, so substitution maps stay slot-indexed.

#include "group.hpp"

#include <optional>

namespace hhalg {

// Smallest cyclotomic order over which the closed product formulas are
// stated: contains the n-th roots and the k-th roots for every cycle
// length k <= N.
inline long base_field_order(int n, int N) {
    long L = n;
    for (int k = 2; k <= N; ++k) L = lcm_long(L, k);
    return L;
}

// Extension that also contains every eigenvalue of every group element:
// a k-cycle with nontrivial phase sum has eigenvalues of order dividing n*k.
inline long diagonalization_field_order(int n, int N) {
    long L = base_field_order(n, N);
    for (int k = 2; k <= N; ++k) L = lcm_long(L, static_cast<long>(n) * k);
    return L;
}

inline CycNum root_of_unity(const FieldPtr& F, long order, long exp) {
    if (F->order() % order != 0)
        throw std::invalid_argument("root_of_unity: order does not divide field order");
    return CycNum::zeta(F, mod_norm(exp, order) * (F->order() / order));
}

struct CycleBlock {
    std::vector<int> slots;  // cycle order, least slot first, sigma(slots[a]) = slots[a+1]
    int A = 0;               // twist phase sum over the cycle, reduced mod n
    bool balanced = false;   // A == 0: the cycle fixes a coordinate line pointwise
    // partial phase sums: gtil[a] = d(slots[0]) + ... + d(slots[a-1]) mod n, gtil[0] = 0
    std::vector<int> gtil;

    int len() const { return static_cast<int>(slots.size()); }
};

struct SectorGeometry {
    GroupElement u;
    std::vector<int> free_fixed;   // sigma(k) = k, d_k = 0
    std::vector<int> moved_diag;   // sigma(k) = k, d_k != 0
    std::vector<CycleBlock> cycles;
    int d_u = 0;                   // codimension of the fixed subspace
    std::vector<VarId> fixed_vars; // coordinates of the fixed subspace, slot order
    std::vector<int> moved_slots;  // slots whose eigen coordinate scales nontrivially
};

inline SectorGeometry analyze_sector(const GroupElement& u) {
    SectorGeometry g;
    g.u = u;
    int n = u.n();
    for (const auto& cyc : u.cycles(true)) {
        if (cyc.size() == 1) {
            int k = cyc[0];
            if (u.d(k) == 0) g.free_fixed.push_back(k);
            else g.moved_diag.push_back(k);
            continue;
        }
        CycleBlock b;
        b.slots = cyc;
        b.gtil.assign(cyc.size(), 0);
        int acc = 0;
        for (size_t a = 0; a < cyc.size(); ++a) {
            b.gtil[a] = mod_norm(acc, n);
            acc += u.d(cyc[a]);
        }
        b.A = mod_norm(acc, n);
        b.balanced = (b.A == 0);
        g.cycles.push_back(std::move(b));
    }
    for (int i : g.free_fixed) g.fixed_vars.push_back(xvar(i));
    for (const auto& c : g.cycles)
        if (c.balanced) g.fixed_vars.push_back(evar(c.slots[0]));
    std::sort(g.fixed_vars.begin(), g.fixed_vars.end(),
              [](const VarId& a, const VarId& b) { return a.idx < b.idx; });

    for (int i : g.moved_diag) g.moved_slots.push_back(i);
    for (const auto& c : g.cycles)
        for (size_t a = 0; a < c.slots.size(); ++a)
            if (!(c.balanced && a == 0)) g.moved_slots.push_back(c.slots[a]);
    std::sort(g.moved_slots.begin(), g.moved_slots.end());
    g.d_u = static_cast<int>(g.moved_slots.size());
    return g;
}

// eigenvalue of the eigen coordinate at `slot`, as (root order, exponent):
// lambda = zeta_order^exp. Fixed slots give (1,0); a diagonal slot gives
// (n, d); position b of a k-cycle gives (n k, A + n b) where b counts from 0.
inline std::pair<long, long> eigenvalue_exponent(const SectorGeometry& g, int slot) {
    int n = g.u.n();
    for (int i : g.free_fixed)
        if (i == slot) return {1, 0};
    for (int i : g.moved_diag)
        if (i == slot) return {n, g.u.d(i)};
    for (const auto& c : g.cycles)
        for (size_t a = 0; a < c.slots.size(); ++a)
            if (c.slots[a] == slot) {
                long k = c.len();
                return {n * k, mod_norm(c.A + n * static_cast<long>(a), n * k)};
            }
    throw std::invalid_argument("eigenvalue_exponent: bad slot");
}

inline CycNum eigenvalue(const SectorGeometry& g, int slot, const FieldPtr& F) {
    auto [order, exp] = eigenvalue_exponent(g, slot);
    return root_of_unity(F, order, exp);
}

// The eigen coordinate at position b (0-based) of a cycle is
//   ehat_b = (1/k) sum_a zeta_k^(-b a) w_a x_(slots[a]),
// with weight w_a = mu^(-a) gtil_a and mu = zeta_(nk)^A; its eigenvalue is
// mu zeta_k^b. The inverse change is x_(slots[a]) = w_a^(-1) sum_b
// zeta_k^(a b) ehat_b. Balanced cycles have mu = 1 and stay inside the
// engine field; unbalanced ones need nk to divide the field order.

inline CycNum cycle_weight(const SectorGeometry& g, const CycleBlock& c, int a, const FieldPtr& F) {
    int n = g.u.n();
    long k = c.len();
    // w_a = zeta_(nk)^(-A a) * zeta_n^(gtil_a), and zeta_n = zeta_(nk)^k
    return root_of_unity(F, n * k, -static_cast<long>(c.A) * a + k * static_cast<long>(c.gtil[a]));
}

inline std::map<VarId, Poly> to_eigen_subst(const SectorGeometry& g, const FieldPtr& F) {
    std::map<VarId, Poly> repl;
    for (int i : g.free_fixed) repl[xvar(i)] = Poly::var(evar(i), F);
    for (int i : g.moved_diag) repl[xvar(i)] = Poly::var(evar(i), F);
    for (const auto& c : g.cycles) {
        long k = c.len();
        for (int a = 0; a < k; ++a) {
            Poly x;
            CycNum winv = cycle_weight(g, c, a, F).inverse();
            for (int b = 0; b < k; ++b)
                x += Poly::monomial(Monomial::var(evar(c.slots[b])),
                                    winv * root_of_unity(F, k, static_cast<long>(a) * b));
            repl[xvar(c.slots[a])] = std::move(x);
        }
    }
    return repl;
}

inline std::map<VarId, Poly> from_eigen_subst(const SectorGeometry& g, const FieldPtr& F) {
    std::map<VarId, Poly> repl;
    for (int i : g.free_fixed) repl[evar(i)] = Poly::var(xvar(i), F);
    for (int i : g.moved_diag) repl[evar(i)] = Poly::var(xvar(i), F);
    for (const auto& c : g.cycles) {
        long k = c.len();
        for (int b = 0; b < k; ++b) {
            Poly e;
            for (int a = 0; a < k; ++a)
                e += Poly::monomial(Monomial::var(xvar(c.slots[a])),
                                    cycle_weight(g, c, a, F) *
                                        root_of_unity(F, k, -static_cast<long>(b) * a) * Rat(1, k));
            repl[evar(c.slots[b])] = std::move(e);
        }
    }
    return repl;
}

// restriction to the fixed subspace: free fixed coordinates pass through,
// coordinates in a balanced cycle collapse onto its invariant line
// (x_(slots[a]) = gtil_a^(-1) ehat_0 there), all other coordinates vanish
inline std::map<VarId, Poly> restrict_subst(const SectorGeometry& g, const FieldPtr& F) {
    std::map<VarId, Poly> repl;
    int n = g.u.n();
    for (int i : g.moved_diag) repl[xvar(i)] = Poly::zero();
    for (const auto& c : g.cycles) {
        for (size_t a = 0; a < c.slots.size(); ++a) {
            if (!c.balanced) {
                repl[xvar(c.slots[a])] = Poly::zero();
            } else {
                repl[xvar(c.slots[a])] = Poly::monomial(Monomial::var(evar(c.slots[0])),
                                                        root_of_unity(F, n, -c.gtil[a]));
            }
        }
    }
    return repl;
}

inline Poly fermat_polynomial(int n, int N, const FieldPtr& F) {
    Poly f;
    for (int i = 1; i <= N; ++i)
        f += Poly::monomial(Monomial::var(xvar(i), n), CycNum::rational(F, 1));
    return f;
}

// drop any monomial that the Fermat Jacobian ideal absorbs: exponent >= n-1
// in either coordinate system
inline Poly milnor_reduce(const Poly& p, int n) {
    return p.drop_high_powers(n - 1, VarKind::X).drop_high_powers(n - 1, VarKind::E);
}

inline Poly restrict_to_sector(const Poly& p, const SectorGeometry& g, const FieldPtr& F) {
    return milnor_reduce(p.subst(restrict_subst(g, F)), g.u.n());
}

// a section of the restriction: rebuild an ambient polynomial from fixed
// coordinates; the balanced-cycle coordinate lifts to its averaged expression
inline std::map<VarId, Poly> lift_subst(const SectorGeometry& g, const FieldPtr& F) {
    std::map<VarId, Poly> repl;
    int n = g.u.n();
    for (const auto& c : g.cycles) {
        if (!c.balanced) continue;
        long k = c.len();
        Poly e;
        for (int a = 0; a < k; ++a)
            e += Poly::monomial(Monomial::var(xvar(c.slots[a])),
                                root_of_unity(F, n, c.gtil[a]) * Rat(1, k));
        repl[evar(c.slots[0])] = std::move(e);
    }
    return repl;
}

inline Poly lift_from_sector(const Poly& p, const SectorGeometry& g, const FieldPtr& F) {
    return p.subst(lift_subst(g, F));
}

// monomial basis of the sector: every fixed coordinate with exponent <= n-2
inline std::vector<Monomial> sector_basis(const SectorGeometry& g) {
    std::vector<Monomial> basis{Monomial::one()};
    for (const VarId& v : g.fixed_vars) {
        std::vector<Monomial> next;
        for (const auto& m : basis)
            for (int e = 0; e <= g.u.n() - 2; ++e) next.push_back(m * Monomial::var(v, e));
        basis = std::move(next);
    }
    return basis;
}

inline Rat sector_age(const SectorGeometry& g) {
    int n = g.u.n();
    Rat a(0);
    for (int i : g.moved_diag) a += Rat(g.u.d(i), n);
    for (const auto& c : g.cycles) a += Rat(c.A, n) + Rat(c.len() - 1, 2);
    return a;
}

}  // namespace hhalg
