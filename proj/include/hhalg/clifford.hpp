#pragma once

// Exterior algebra plumbing for the Koszul-style product formula.
//
// A Wedge holds an element of C[x] (x) Lambda(e_1..e_N) as a map from index
// bitmasks to polynomial coefficients; the same container serves for wedges
// of theta generators and for wedges of their dual contractions, which
// multiply by the same rule. Thetas act on dual wedges by contraction:
// feeding theta_i into a dual monomial removes the i-th factor with the sign
// (-1)^(number of smaller indices present), and a product of thetas acts
// rightmost factor first. A BiWedge holds an element with two wedge tensor
// factors, multiplied with the Koszul sign.
//
// Index i occupies bit (i-1); masks list factors in increasing index order.

#include "fixedlocus.hpp"

#include <bit>
#include <cstdint>
#include <optional>

namespace hhalg {

using Mask = uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }

inline bool mask_has(Mask m, int i) { return (m >> (i - 1)) & 1u; }

inline Mask mask_bit(int i) { return Mask(1) << (i - 1); }

// sign of the permutation sorting a sequence of distinct indices ascending;
// 0 when an index repeats
inline int sequence_sort_sign(const std::vector<int>& seq) {
    int sign = 1;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b) {
            if (seq[a] == seq[b]) return 0;
            if (seq[a] > seq[b]) sign = -sign;
        }
    return sign;
}

inline Mask mask_of(const std::vector<int>& seq) {
    Mask m = 0;
    for (int i : seq) m |= mask_bit(i);
    return m;
}

// sign of merging two ascending wedges A and B into one (A factors first):
// counts the transpositions moving every B-factor past the larger A-factors
inline int merge_sign(Mask A, Mask B) {
    int sign = 1;
    for (int i = 1; Mask(1) << (i - 1) <= B; ++i) {
        if (!mask_has(B, i)) continue;
        Mask higherA = A & ~((Mask(1) << i) - 1);
        if (mask_size(higherA) % 2) sign = -sign;
    }
    return sign;
}

class Wedge {
public:
    Wedge() = default;

    static Wedge unit(const FieldPtr& F) {
        Wedge w;
        w.c_[0] = Poly::constant(CycNum::rational(F, 1));
        return w;
    }

    static Wedge single(Mask m, Poly p) {
        Wedge w;
        if (!p.is_zero()) w.c_[m] = std::move(p);
        return w;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Mask, Poly>& parts() const { return c_; }

    Poly part(Mask m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Poly::zero() : it->second;
    }

    void add(Mask m, const Poly& p) {
        if (p.is_zero()) return;
        auto it = c_.find(m);
        if (it == c_.end()) {
            c_[m] = p;
        } else {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    friend Wedge operator+(const Wedge& a, const Wedge& b) {
        Wedge r = a;
        for (const auto& [m, p] : b.c_) r.add(m, p);
        return r;
    }

    friend Wedge operator-(const Wedge& a, const Wedge& b) {
        Wedge r = a;
        for (const auto& [m, p] : b.c_) r.add(m, -p);
        return r;
    }

    friend Wedge operator*(const Wedge& a, const Wedge& b) {  // exterior product
        Wedge r;
        for (const auto& [ma, pa] : a.c_)
            for (const auto& [mb, pb] : b.c_) {
                if (ma & mb) continue;
                Poly p = pa * pb;
                if (merge_sign(ma, mb) < 0) p = -p;
                r.add(ma | mb, p);
            }
        return r;
    }

    friend Wedge operator*(const Wedge& a, const Poly& s) {
        Wedge r;
        for (const auto& [m, p] : a.c_) r.add(m, p * s);
        return r;
    }
    friend Wedge operator*(const Wedge& a, const CycNum& s) {
        Wedge r;
        for (const auto& [m, p] : a.c_) r.add(m, p * s);
        return r;
    }

    Wedge& operator+=(const Wedge& o) { return *this = *this + o; }
    Wedge& operator*=(const Wedge& o) { return *this = *this * o; }

    friend bool operator==(const Wedge& a, const Wedge& b) { return (a - b).is_zero(); }

    // exponential of an even element with no degree-0 part; nilpotency in a
    // finite wedge algebra makes the series finite
    Wedge exp_even(const FieldPtr& F) const {
        for (const auto& [m, p] : c_)
            if (mask_size(m) % 2 || m == 0)
                throw std::invalid_argument("Wedge::exp_even: needs strictly positive even degrees");
        Wedge result = unit(F), power = unit(F);
        Rat factorial(1);
        for (int k = 1;; ++k) {
            power = power * (*this);
            if (power.is_zero()) break;
            factorial *= k;
            result += power * Poly::constant(CycNum::rational(F, Rat(1) / factorial));
        }
        return result;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [m, p] : c_) {
            if (!s.empty()) s += "  +  ";
            s += "(" + p.str() + ")";
            for (int i = 1; Mask(1) << (i - 1) <= m; ++i)
                if (mask_has(m, i)) s += "^e" + std::to_string(i);
        }
        return s;
    }

private:
    std::map<Mask, Poly> c_;
};

// theta_i feeding into a dual wedge monomial
inline std::pair<Mask, int> contract_one(Mask dual, int i) {
    if (!mask_has(dual, i)) return {0, 0};
    int below = mask_size(dual & (mask_bit(i) - 1));
    return {dual & ~mask_bit(i), (below % 2) ? -1 : 1};
}

// contract a whole theta monomial (mask A, factors ascending) into a dual
// monomial, rightmost theta factor acting first; sign 0 when it dies
inline std::pair<Mask, int> contract_wedge(Mask dual, Mask A) {
    int sign = 1;
    for (int i = 32; i >= 1; --i) {
        if (!(A & (Mask(1) << (i - 1)))) continue;
        auto [nm, s] = contract_one(dual, i);
        if (s == 0) return {0, 0};
        dual = nm;
        sign *= s;
    }
    return {dual, sign};
}

// module action of a theta wedge-poly on a dual wedge-poly
inline Wedge act(const Wedge& thetas, const Wedge& duals) {
    Wedge out;
    for (const auto& [tm, tp] : thetas.parts())
        for (const auto& [dm, dp] : duals.parts()) {
            auto [cur, sign] = contract_wedge(dm, tm);
            if (sign == 0) continue;
            Poly p = tp * dp;
            if (sign < 0) p = -p;
            out.add(cur, p);
        }
    return out;
}

class BiWedge {
public:
    using Key = std::pair<Mask, Mask>;

    BiWedge() = default;

    static BiWedge unit(const FieldPtr& F) {
        BiWedge b;
        b.c_[{0, 0}] = Poly::constant(CycNum::rational(F, 1));
        return b;
    }

    static BiWedge single(Mask a, Mask b, Poly p) {
        BiWedge w;
        if (!p.is_zero()) w.c_[{a, b}] = std::move(p);
        return w;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Poly>& parts() const { return c_; }

    void add(Mask a, Mask b, const Poly& p) {
        if (p.is_zero()) return;
        Key k{a, b};
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = p;
        } else {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    friend BiWedge operator+(const BiWedge& x, const BiWedge& y) {
        BiWedge r = x;
        for (const auto& [k, p] : y.c_) r.add(k.first, k.second, p);
        return r;
    }

    friend bool operator==(const BiWedge& x, const BiWedge& y) {
        BiWedge diff = x;
        for (const auto& [k, p] : y.c_) diff.add(k.first, k.second, -p);
        return diff.is_zero();
    }

    // (a (x) b)(c (x) d) = (-1)^(|b||c|) ac (x) bd
    friend BiWedge operator*(const BiWedge& x, const BiWedge& y) {
        BiWedge r;
        for (const auto& [kx, px] : x.c_)
            for (const auto& [ky, py] : y.c_) {
                auto [a, b] = kx;
                auto [c, d] = ky;
                if ((a & c) || (b & d)) continue;
                int sign = merge_sign(a, c) * merge_sign(b, d);
                if ((mask_size(b) * mask_size(c)) % 2) sign = -sign;
                Poly p = px * py;
                if (sign < 0) p = -p;
                r.add(a | c, b | d, p);
            }
        return r;
    }

    BiWedge exp_even(const FieldPtr& F) const {
        for (const auto& [k, p] : c_)
            if ((mask_size(k.first) + mask_size(k.second)) % 2 ||
                (k.first == 0 && k.second == 0))
                throw std::invalid_argument("BiWedge::exp_even: needs strictly positive even degrees");
        BiWedge result = unit(F), power = unit(F);
        Rat factorial(1);
        for (int k = 1;; ++k) {
            power = power * (*this);
            if (power.is_zero()) break;
            factorial *= k;
            BiWedge scaled;
            for (const auto& [key, p] : power.c_)
                scaled.add(key.first, key.second, p * CycNum::rational(F, Rat(1) / factorial));
            result = result + scaled;
        }
        return result;
    }

private:
    std::map<Key, Poly> c_;
};

// the pairing map: (p1 (x) p2) (x) (q1 (x) q2) -> (-1)^(|q1||p2|) p1(q1) . p2(q2)
// extended bilinearly; H supplies p1 (x) p2, the xi factors supply q1 and q2,
// and the two contracted results multiply in the dual exterior algebra
inline Wedge upsilon(const BiWedge& H, const Wedge& q1, const Wedge& q2) {
    Wedge out;
    for (const auto& [key, hp] : H.parts()) {
        auto [A, B] = key;
        for (const auto& [m1, p1] : q1.parts()) {
            auto [c1, s1] = contract_wedge(m1, A);
            if (s1 == 0) continue;
            if ((mask_size(m1) * mask_size(B)) % 2) s1 = -s1;  // q1 moves past p2
            for (const auto& [m2, p2] : q2.parts()) {
                auto [c2, s2] = contract_wedge(m2, B);
                if (s2 == 0) continue;
                if (c1 & c2) continue;
                Poly prod = hp * p1 * p2;
                if (s1 * s2 * merge_sign(c1, c2) < 0) prod = -prod;
                out.add(c1 | c2, prod);
            }
        }
    }
    return out;
}

// ---- block wedges attached to a twist ----------------------------------
//
// Every 2+-cycle block of u gets a dual wedge: a balanced (phase-trivial)
// cycle contributes sum_m (-1)^(m-1) gtil_m (product over the cycle order
// skipping position m), an unbalanced cycle the full product in cycle order;
// the phase-moved fixed slots contribute one ascending product. Blocks are
// multiplied in order of least slot.

inline Wedge dual_sequence(const std::vector<int>& seq, const FieldPtr& F) {
    int sign = sequence_sort_sign(seq);
    if (sign == 0) return Wedge();
    return Wedge::single(mask_of(seq), Poly::constant(CycNum::rational(F, sign)));
}

inline CycNum gtil_value(const SectorGeometry& g, const CycleBlock& c, int a, const FieldPtr& F) {
    return root_of_unity(F, g.u.n(), c.gtil[a]);
}

inline Wedge dual_wedge_block(const SectorGeometry& g, const CycleBlock& c, const FieldPtr& F) {
    if (!c.balanced) return dual_sequence(c.slots, F);
    Wedge out;
    for (size_t m = 0; m < c.slots.size(); ++m) {
        std::vector<int> seq;
        for (size_t a = 0; a < c.slots.size(); ++a)
            if (a != m) seq.push_back(c.slots[a]);
        Wedge term = dual_sequence(seq, F) * gtil_value(g, c, static_cast<int>(m), F);
        if (m % 2) term = term * Poly::constant(CycNum::rational(F, -1));
        out += term;
    }
    return out;
}

inline Wedge dual_wedge_of_twist(const SectorGeometry& g, const FieldPtr& F) {
    // blocks: cycles plus one block of phase-moved fixed slots, by least slot
    struct Blk {
        int least;
        Wedge w;
    };
    std::vector<Blk> blocks;
    for (const auto& c : g.cycles) blocks.push_back({c.slots[0], dual_wedge_block(g, c, F)});
    if (!g.moved_diag.empty())
        blocks.push_back({g.moved_diag.front(), dual_sequence(g.moved_diag, F)});
    std::sort(blocks.begin(), blocks.end(), [](const Blk& a, const Blk& b) { return a.least < b.least; });
    Wedge out = Wedge::unit(F);
    for (const auto& b : blocks) out = out * b.w;
    return out;
}

// eigen thetas: the theta at slot(b) of a cycle mirrors the eigen coordinate
// transform; fixed and phase-moved slots keep their own theta
inline Wedge theta_tilde(const SectorGeometry& g, int slot, const FieldPtr& F) {
    for (const auto& c : g.cycles) {
        long k = c.len();
        for (int b = 0; b < k; ++b) {
            if (c.slots[b] != slot) continue;
            Wedge out;
            for (int a = 0; a < k; ++a)
                out += Wedge::single(mask_bit(c.slots[a]),
                                     Poly::constant(cycle_weight(g, c, a, F) *
                                                    root_of_unity(F, k, -static_cast<long>(b) * a) *
                                                    Rat(1, k)));
            return out;
        }
    }
    return Wedge::single(mask_bit(slot), Poly::constant(CycNum::rational(F, 1)));
}

}  // namespace hhalg
