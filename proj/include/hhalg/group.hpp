#pragma once

// Elements of the symmetry group: a permutation of the N coordinates paired
// with a diagonal character (exponent vector mod n). The element (sigma, d)
// is the monomial matrix sending the basis vector e_k to zeta_n^(d_k)
// e_(sigma(k)); composition below is exactly matrix multiplication, which a
// test pins against explicitly multiplied matrices.
//
// Indices are 1-based throughout (slot 0 of the vectors is unused).

#include "polyring.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhalg {

class GroupElement {
public:
    GroupElement() = default;

    GroupElement(int n, std::vector<int> perm, std::vector<int> diag)
        : n_(n), perm_(std::move(perm)), diag_(std::move(diag)) {
        if (perm_.size() != diag_.size() || perm_.empty())
            throw std::invalid_argument("GroupElement: size mismatch");
        perm_[0] = 0;
        diag_[0] = 0;
        std::vector<bool> seen(perm_.size(), false);
        for (size_t k = 1; k < perm_.size(); ++k) {
            if (perm_[k] < 1 || perm_[k] >= static_cast<int>(perm_.size()) || seen[perm_[k]])
                throw std::invalid_argument("GroupElement: not a permutation");
            seen[perm_[k]] = true;
            diag_[k] = mod_norm(diag_[k], n_);
        }
    }

    static GroupElement identity(int n, int N) {
        std::vector<int> p(N + 1), d(N + 1, 0);
        for (int k = 0; k <= N; ++k) p[k] = k;
        return GroupElement(n, std::move(p), std::move(d));
    }

    int n() const { return n_; }
    int N() const { return static_cast<int>(perm_.size()) - 1; }
    int sigma(int k) const { return perm_[k]; }
    int d(int k) const { return diag_[k]; }

    int sigma_inv(int k) const {
        for (int j = 1; j <= N(); ++j)
            if (perm_[j] == k) return j;
        throw std::logic_error("GroupElement: bad permutation");
    }

    bool is_identity() const {
        for (int k = 1; k <= N(); ++k)
            if (perm_[k] != k || diag_[k] != 0) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int k = 1; k <= N(); ++k)
            if (perm_[k] != k) return false;
        return true;
    }

    // matrix product: (a*b) e_k = a (b e_k)
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        check_compatible(a, b);
        int N = a.N();
        std::vector<int> p(N + 1, 0), d(N + 1, 0);
        for (int k = 1; k <= N; ++k) {
            p[k] = a.perm_[b.perm_[k]];
            d[k] = mod_norm(b.diag_[k] + a.diag_[b.perm_[k]], a.n_);
        }
        return GroupElement(a.n_, std::move(p), std::move(d));
    }

    GroupElement inverse() const {
        int N = this->N();
        std::vector<int> p(N + 1, 0), d(N + 1, 0);
        for (int k = 1; k <= N; ++k) p[perm_[k]] = k;
        for (int k = 1; k <= N; ++k) d[k] = mod_norm(-diag_[p[k]], n_);
        return GroupElement(n_, std::move(p), std::move(d));
    }

    int diag_sum() const {  // mod n
        int s = 0;
        for (int k = 1; k <= N(); ++k) s += diag_[k];
        return mod_norm(s, n_);
    }

    int perm_sign() const {
        int sign = 1;
        for (const auto& c : cycles(false))
            if (c.size() % 2 == 0) sign = -sign;
        return sign;
    }

    // cycles of the permutation, each starting at its least element and
    // following k -> sigma(k); ordered by least element
    std::vector<std::vector<int>> cycles(bool include_fixed) const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(N() + 1, false);
        for (int k = 1; k <= N(); ++k) {
            if (seen[k]) continue;
            std::vector<int> c;
            int j = k;
            do {
                seen[j] = true;
                c.push_back(j);
                j = perm_[j];
            } while (j != k);
            if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
        }
        return out;
    }

    auto operator<=>(const GroupElement&) const = default;

    std::string str() const {
        if (is_identity()) return "id";
        std::string s;
        for (const auto& c : cycles(false)) {
            s += "(";
            for (size_t a = 0; a < c.size(); ++a) s += (a ? " " : "") + std::to_string(c[a]);
            s += ")";
        }
        for (int k = 1; k <= N(); ++k) {
            if (diag_[k] == 0) continue;
            s += (s.empty() ? "" : " ") + std::string("t") + std::to_string(k);
            if (diag_[k] != 1) s += "^" + std::to_string(diag_[k]);
        }
        return s;
    }

private:
    static void check_compatible(const GroupElement& a, const GroupElement& b) {
        if (a.n_ != b.n_ || a.perm_.size() != b.perm_.size())
            throw std::invalid_argument("GroupElement: incompatible elements");
    }

    int n_ = 1;
    std::vector<int> perm_;
    std::vector<int> diag_;
};

// convenience builders

inline GroupElement diag_element(int n, int N, const std::vector<std::pair<int, int>>& exps) {
    auto g = GroupElement::identity(n, N);
    std::vector<int> p(N + 1), d(N + 1, 0);
    for (int k = 0; k <= N; ++k) p[k] = k;
    for (auto [k, e] : exps) d[k] = e;
    return GroupElement(n, std::move(p), std::move(d));
}

inline GroupElement cycle_element(int n, int N, const std::vector<int>& cyc) {
    std::vector<int> p(N + 1), d(N + 1, 0);
    for (int k = 0; k <= N; ++k) p[k] = k;
    for (size_t a = 0; a < cyc.size(); ++a) p[cyc[a]] = cyc[(a + 1) % cyc.size()];
    return GroupElement(n, std::move(p), std::move(d));
}

// the coordinate twist x_k -> zeta^(d_k) x_(sigma(k)); u -> twist(u) is
// contravariant-free here because substitution composes the same way as the
// matrices do (a test pins twist(a*b) == twist(a) after twist(b))
inline std::map<VarId, Poly> twist_subst(const GroupElement& u, const FieldPtr& F) {
    long L = F->order();
    if (L % u.n() != 0) throw std::invalid_argument("twist_subst: field order not divisible by n");
    std::map<VarId, Poly> repl;
    for (int k = 1; k <= u.N(); ++k)
        repl[xvar(k)] =
            Poly::monomial(Monomial::var(xvar(u.sigma(k))), CycNum::zeta(F, u.d(k) * (L / u.n())));
    return repl;
}

inline Poly twist(const Poly& p, const GroupElement& u, const FieldPtr& F) {
    return p.subst(twist_subst(u, F));
}

// subgroup generated by gens inside the full wreath-type group, breadth-first;
// throws if the closure exceeds `cap` elements
inline std::vector<GroupElement> generate_group(int n, int N,
                                                const std::vector<GroupElement>& gens,
                                                size_t cap = 20000) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> queue;
    auto push = [&](const GroupElement& g) {
        if (seen.insert(g).second) {
            queue.push_back(g);
            if (seen.size() > cap) throw std::runtime_error("generate_group: closure exceeds cap");
        }
    };
    push(GroupElement::identity(n, N));
    for (size_t head = 0; head < queue.size(); ++head) {
        GroupElement g = queue[head];
        for (const auto& h : gens) push(g * h);
    }
    return {seen.begin(), seen.end()};
}

inline size_t element_index(const std::vector<GroupElement>& G, const GroupElement& u) {
    auto it = std::lower_bound(G.begin(), G.end(), u);
    if (it == G.end() || !(*it == u)) throw std::runtime_error("element_index: not in group");
    return static_cast<size_t>(it - G.begin());
}

// classes as index lists into the sorted group vector, each class led by its
// least element
inline std::vector<std::vector<size_t>> conjugacy_classes(const std::vector<GroupElement>& G) {
    std::vector<std::vector<size_t>> classes;
    std::vector<bool> used(G.size(), false);
    for (size_t i = 0; i < G.size(); ++i) {
        if (used[i]) continue;
        std::set<size_t> cls;
        for (const auto& g : G) cls.insert(element_index(G, g * G[i] * g.inverse()));
        std::vector<size_t> v(cls.begin(), cls.end());
        for (size_t j : v) used[j] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

inline std::vector<size_t> centralizer_indices(const std::vector<GroupElement>& G,
                                               const GroupElement& u) {
    std::vector<size_t> out;
    for (size_t i = 0; i < G.size(); ++i)
        if (G[i] * u == u * G[i]) out.push_back(i);
    return out;
}

}  // namespace hhalg
