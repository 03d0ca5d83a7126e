#pragma once

// Ground-truth sector products straight from the defining contraction
// formula, with no closed-form product shortcuts.
//
// The product of the classes of sectors u and v is read off from
//
//     Upsilon( exp(Q_f(x, u(x), x)) . R_u (x) R_v )
//
// where Q_f is the double difference-quotient form of f and R_w is the
// canonical representative of sector w,
//
//     R_w = exp(S_w) . dual block wedge of w.
//
// S_w is the sector's own interaction bivector: the twist couples each
// moved coordinate x_s to x_sigma(s), so the double quotient of f taken at
// the twisted point and then at the fixed-locus projection is nonzero
// exactly on those pairs (for the diagonal polynomials handled here it
// vanishes on every other pair, including everything straddling two
// cycles). Each cycle block carries the prefactor 1/det(1 - u) over the
// block's moved eigendirections; when the block's phases cancel, that
// determinant is the block length itself and the projection point is the
// block's invariant line rather than zero.
//
// multiply() reads the class of the contraction result in the eigenframe of
// the target twist. There the sector cohomology is the Milnor ring of the
// fixed-locus polynomial sitting on the full wedge of moved eigendirections,
// so the class is the coefficient of that one top blade, with the moved
// eigencoordinates killed and the result reduced by the Jacobian ideal.
// Spurious contributions into the top blade are multiples of the twisted
// gradient, which restricts into the Jacobian ideal, so the read never picks
// up junk.
//
// Everything runs over the field containing all twist eigenvalues. This is
// deliberately slow and literal; it exists to adjudicate the fast closed
// product rules.

#include <stdexcept>

#include "clifford.hpp"

namespace hhalg {

class ProductOracle {
public:
    ProductOracle(int n, int N)
        : n_(n),
          N_(N),
          F_(make_cyclotomic_field(diagonalization_field_order(n, N))),
          f_(fermat_polynomial(n, N, F_)) {}

    int n() const { return n_; }
    int N() const { return N_; }
    const FieldPtr& field() const { return F_; }

    // Q_f(x, y, z) = sum_(j<=i) D_j^(y->(y,z)) D_i^(x->(x,y)) f . th_i (x) th_j,
    // evaluated at y = u(x), z = x, where D is the difference quotient and
    // u acts on coordinates by x_k -> zeta^(d_k) x_(sigma(k)).
    BiWedge pair_form(const GroupElement& u) const {
        std::map<VarId, Poly> eval;
        for (int k = 1; k <= N_; ++k) {
            CycNum gk = root_of_unity(F_, n_, u.d(k));
            eval[VarId{VarKind::Y, k}] = Poly::var(xvar(u.sigma(k)), F_) * gk;
            eval[VarId{VarKind::Z, k}] = Poly::var(xvar(k), F_);
        }
        BiWedge H;
        for (int i = 1; i <= N_; ++i) {
            Poly d1 = difference_quotient(f_, VarKind::X, i, VarKind::Y, VarKind::Z);
            // first copy of the quotient is the ambient x, second becomes y
            d1 = d1.rename([](VarId v) {
                if (v.kind == VarKind::Y) return VarId{VarKind::X, v.idx};
                if (v.kind == VarKind::Z) return VarId{VarKind::Y, v.idx};
                return v;
            });
            for (int j = 1; j <= i; ++j) {
                Poly d2 = difference_quotient(d1, VarKind::Y, j, VarKind::EY, VarKind::EZ);
                d2 = d2.rename([](VarId v) {
                    if (v.kind == VarKind::EY) return VarId{VarKind::Y, v.idx};
                    if (v.kind == VarKind::EZ) return VarId{VarKind::Z, v.idx};
                    return v;
                });
                Poly val = d2.subst(eval);
                if (!val.is_zero()) H.add(mask_bit(i), mask_bit(j), val);
            }
        }
        return H;
    }

    // S_u = sum over moved slots s of
    //
    //     D_sigma(s)^(x->(x,x^u)) D_s^(x->(x,u(x))) (f) / det(1 - u|block)
    //              . th_sigma(s) ^ th_s
    //
    // For f = sum x^n the inner quotient splits x_s^n between x_s and
    // zeta^(d_s) x_sigma(s), and the outer one splits the transferred power
    // between x_sigma(s) and its fixed-locus projection (zero unless the
    // block's phases cancel). The determinant runs over the block's moved
    // eigendirections only, so a phase-cancelling block contributes its
    // length.
    Wedge sector_form(const SectorGeometry& g) const {
        Wedge S;
        for (const auto& c : g.cycles) {
            int k = c.len();
            CycNum P;
            if (c.balanced) {
                P = CycNum::rational(F_, k);
            } else {
                CycNum detm = root_of_unity(F_, n_, c.A);
                if (k % 2) detm = -detm;  // (-1)^(k-1) zeta^A
                P = CycNum::rational(F_, 1) - detm;
            }
            CycNum Pinv = P.inverse();

            std::vector<Poly> proj(k);
            if (c.balanced) {
                Poly line;
                for (int m = 0; m < k; ++m)
                    line += Poly::var(xvar(c.slots[m]), F_) *
                            (root_of_unity(F_, n_, c.gtil[m]) * Rat(1, k));
                for (int a = 0; a < k; ++a)
                    proj[a] = line * root_of_unity(F_, n_, -c.gtil[a]);
            }

            for (int a = 0; a < k; ++a) {
                int s = c.slots[a];
                int r = g.u.sigma(s);
                const Poly& pr = proj[(a + 1) % k];
                Poly xs = Poly::var(xvar(s), F_);
                Poly xr = Poly::var(xvar(r), F_);
                Poly D;
                for (int b = 1; b <= n_ - 1; ++b) {
                    CycNum zb = root_of_unity(F_, n_, static_cast<long>(g.u.d(s)) * b);
                    Poly xspow = Poly::constant(CycNum::rational(F_, 1));
                    for (int t = 0; t < n_ - 1 - b; ++t) xspow = xspow * xs;
                    Poly split;
                    for (int cc = 0; cc <= b - 1; ++cc) {
                        Poly term = Poly::constant(CycNum::rational(F_, 1));
                        for (int t = 0; t < cc; ++t) term = term * xr;
                        for (int t = 0; t < b - 1 - cc; ++t) term = term * pr;
                        split += term;
                    }
                    D += xspow * split * zb;
                }
                Wedge biv = Wedge::single(mask_bit(r), Poly::constant(CycNum::rational(F_, 1))) *
                            Wedge::single(mask_bit(s), Poly::constant(CycNum::rational(F_, 1)));
                S += biv * (D * Pinv);
            }
        }
        return S;
    }

    Wedge sector_form(const GroupElement& u) const { return sector_form(analyze_sector(u)); }

    const Wedge& sector_representative(const GroupElement& u) const {
        auto it = rep_memo_.find(u);
        if (it != rep_memo_.end()) return it->second;
        Wedge r = build_representative(u);
        return rep_memo_.emplace(u, std::move(r)).first->second;
    }

    struct Product {
        Poly coefficient;    // in the fixed coordinates of u*v, Jacobian-reduced
        bool conclusive;     // the read was well defined (kept for reporting)
    };

    Product multiply(const GroupElement& u, const GroupElement& v) const {
        GroupElement w = u * v;
        SectorGeometry gw = analyze_sector(w);

        Wedge R = upsilon(pair_form(u).exp_even(F_), sector_representative(u),
                          sector_representative(v));
        if (R.is_zero()) return {Poly(), true};

        // class read happens in the eigenframe of w, where the cohomology of
        // the sector complex is the fixed-part Milnor ring sitting on the
        // full wedge of moved eigendirections
        Mask topmask = 0;
        for (int s : gw.moved_slots) topmask |= mask_bit(s);

        Wedge Re = to_eigen_frame(R, gw);
        Wedge tope = to_eigen_frame(dual_wedge_of_twist(gw, F_), gw);
        CycNum unit = tope.part(topmask).coefficient(Monomial::one());
        if (unit.is_zero()) throw std::logic_error("multiply: degenerate top frame");

        Poly cls = eigen_restrict(Re.part(topmask), gw) * unit.inverse();
        return {cls, true};
    }

    // rewrite a wedge over the eigen directions of w. The dual theta symbols
    // transform contragrediently to the coordinates in the phase weights:
    // within a cycle block, dtheta_(slots[a]) = w_a sum_b zeta_k^(-ab)
    // dtheta~_(slots[b]), so the hat-sum top of a balanced block always has a
    // nonzero component on the moved top blade (a Vandermonde determinant).
    // Polynomial coefficients move to eigen variables as usual.
    Wedge to_eigen_frame(const Wedge& R, const SectorGeometry& gw) const {
        std::vector<Wedge> row(N_ + 1);
        for (int a = 1; a <= N_; ++a)
            row[a] = Wedge::single(mask_bit(a), Poly::constant(CycNum::rational(F_, 1)));
        for (const auto& c : gw.cycles) {
            long k = c.len();
            for (int a = 0; a < k; ++a) {
                Wedge s;
                for (int b = 0; b < k; ++b)
                    s += Wedge::single(mask_bit(c.slots[b]),
                                       Poly::constant(cycle_weight(gw, c, a, F_) *
                                                      root_of_unity(F_, k, -static_cast<long>(a) * b)));
                row[c.slots[a]] = std::move(s);
            }
        }
        auto toe = to_eigen_subst(gw, F_);
        Wedge out;
        for (const auto& [m, p] : R.parts()) {
            Wedge blade = Wedge::unit(F_);
            for (int a = 1; a <= N_; ++a)
                if (mask_has(m, a)) blade = blade * row[a];
            if (blade.is_zero()) continue;
            out += blade * p.subst(toe);
        }
        return out;
    }

    // kill the moved eigen coordinates and reduce by the Jacobian ideal
    Poly eigen_restrict(const Poly& p, const SectorGeometry& gw) const {
        std::map<VarId, Poly> kill;
        for (int s : gw.moved_slots) kill[evar(s)] = Poly::zero();
        Poly q = p.subst(kill);
        // fixed eigen coordinates of free slots go back to plain coordinates
        std::map<VarId, Poly> back;
        for (int i : gw.free_fixed) back[evar(i)] = Poly::var(xvar(i), F_);
        for (int i : gw.moved_diag) back[evar(i)] = Poly::var(xvar(i), F_);
        return milnor_reduce(q.subst(back), n_);
    }

private:
    int n_, N_;
    FieldPtr F_;
    Poly f_;
    mutable std::map<GroupElement, Wedge> rep_memo_;

    Wedge build_representative(const GroupElement& u) const {
        SectorGeometry g = analyze_sector(u);
        Wedge top = dual_wedge_of_twist(g, F_);
        Wedge S = sector_form(g);
        if (S.is_zero()) return top;

        Wedge out = top;
        Wedge sp = Wedge::unit(F_);
        Rat fact(1);
        for (int m = 1; 2 * m <= N_; ++m) {
            sp = sp * S;
            if (sp.is_zero()) break;
            fact = fact * Rat(m);
            out += act(sp * CycNum::rational(F_, Rat(1) / fact), top);
        }
        return out;
    }
};

}  // namespace hhalg
