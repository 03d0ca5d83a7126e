#pragma once

// Multivariate polynomials with cyclotomic coefficients.
//
// Variables are tagged by kind so several coordinate systems can live in one
// expression: X is the ambient system, E the eigenbasis of a twist, and
// Y/Z (resp. EY/EZ) are the doubled copies used by difference quotients.

#include "cyclotomic.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hhalg {

enum class VarKind : uint8_t { X = 0, Y = 1, Z = 2, E = 3, EY = 4, EZ = 5 };

inline const char* var_kind_name(VarKind k) {
    switch (k) {
        case VarKind::X: return "x";
        case VarKind::Y: return "y";
        case VarKind::Z: return "z";
        case VarKind::E: return "xe";
        case VarKind::EY: return "ye";
        case VarKind::EZ: return "ze";
    }
    return "?";
}

struct VarId {
    VarKind kind;
    int idx;
    auto operator<=>(const VarId&) const = default;
};

inline VarId xvar(int i) { return {VarKind::X, i}; }
inline VarId evar(int i) { return {VarKind::E, i}; }

class Monomial {
public:
    using Term = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial var(VarId v, int e = 1) {
        Monomial m;
        if (e != 0) m.t_.push_back({v, e});
        return m;
    }

    int exponent(VarId v) const {
        for (const auto& [w, e] : t_)
            if (w == v) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto ia = a.t_.begin(), ib = b.t_.begin();
        while (ia != a.t_.end() || ib != b.t_.end()) {
            if (ib == b.t_.end() || (ia != a.t_.end() && ia->first < ib->first)) {
                r.t_.push_back(*ia++);
            } else if (ia == a.t_.end() || ib->first < ia->first) {
                r.t_.push_back(*ib++);
            } else {
                int e = ia->second + ib->second;
                if (e != 0) r.t_.push_back({ia->first, e});
                ++ia, ++ib;
            }
        }
        return r;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [v, e] : t_) d += e;
        return d;
    }

    long degree_of_kind(VarKind k) const {
        long d = 0;
        for (const auto& [v, e] : t_)
            if (v.kind == k) d += e;
        return d;
    }

    bool any_exponent_at_least(int bound, VarKind k) const {
        for (const auto& [v, e] : t_)
            if (v.kind == k && e >= bound) return true;
        return false;
    }

    const std::vector<Term>& terms() const { return t_; }
    bool is_one() const { return t_.empty(); }

    auto operator<=>(const Monomial&) const = default;

    std::string str() const {
        if (t_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : t_) {
            if (!s.empty()) s += "*";
            s += var_kind_name(v.kind) + std::to_string(v.idx);
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Term> t_;  // sorted by VarId, exponents nonzero
};

class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }

    static Poly constant(CycNum c) {
        Poly p;
        if (!c.is_zero()) p.t_[Monomial::one()] = std::move(c);
        return p;
    }

    static Poly monomial(Monomial m, CycNum c) {
        Poly p;
        if (!c.is_zero()) p.t_[std::move(m)] = std::move(c);
        return p;
    }

    static Poly var(VarId v, const FieldPtr& F) {
        return monomial(Monomial::var(v), CycNum::rational(F, 1));
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Monomial, CycNum>& terms() const { return t_; }

    CycNum coefficient(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? CycNum::zero() : it->second;
    }

    void add_term(const Monomial& m, const CycNum& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Poly operator*(const Poly& a, const CycNum& s) {
        Poly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.t_) r.add_term(m, c * s);
        return r;
    }
    friend Poly operator*(const CycNum& s, const Poly& a) { return a * s; }
    friend Poly operator*(const Poly& a, const Rat& s) {
        Poly r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.t_) r.add_term(m, c * s);
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

    long total_degree() const {  // -1 for the zero polynomial
        long d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }

    // true when every monomial has the same total degree
    bool is_homogeneous() const {
        long d = -2;
        for (const auto& [m, c] : t_) {
            if (d == -2) d = m.total_degree();
            else if (m.total_degree() != d) return false;
        }
        return true;
    }

    // substitute each variable that appears in the map; others pass through
    Poly subst(const std::map<VarId, Poly>& repl) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            Monomial pass;
            Poly term;
            bool started = false;
            for (const auto& [v, e] : m.terms()) {
                auto it = repl.find(v);
                if (it == repl.end()) {
                    pass = pass * Monomial::var(v, e);
                    continue;
                }
                for (int k = 0; k < e; ++k) {
                    term = started ? term * it->second : it->second;
                    started = true;
                }
            }
            Poly base = Poly::monomial(pass, c);
            r += started ? base * term : base;
        }
        return r;
    }

    // rename variables wholesale (kind/index remap); f must be injective on
    // the variables present
    Poly rename(const std::function<VarId(VarId)>& f) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            Monomial nm;
            for (const auto& [v, e] : m.terms()) nm = nm * Monomial::var(f(v), e);
            r.add_term(nm, c);
        }
        return r;
    }

    // drop every monomial with an exponent >= bound among variables of kind k
    Poly drop_high_powers(int bound, VarKind k) const {
        Poly r;
        for (const auto& [m, c] : t_)
            if (!m.any_exponent_at_least(bound, k)) r.t_[m] = c;
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            bool simple = cs.find_first_of("+-") == std::string::npos ||
                          (cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos);
            if (!simple) cs = "(" + cs + ")";
            if (m.is_one()) s += cs;
            else if (cs == "1") s += m.str();
            else s += cs + "*" + m.str();
        }
        return s;
    }

private:
    std::map<Monomial, CycNum> t_;
};

// Difference quotient in the telescoping normal form: for variables of kind K
// ordered by index, slot i gets
//   D_i f = [ f(Z_<i, Y_i, Y_>i) - f(Z_<=i, Y_>i) ] / (Y_i - Z_i),
// so that f(Y) - f(Z) = sum_i (Y_i - Z_i) D_i f. Kinds yk/zk receive the two
// copies; closed form per monomial:
//   prod_{j<i} Z_j^{e_j} * (sum_{a+b=e_i-1} Y_i^a Z_i^b) * prod_{j>i} Y_j^{e_j}.
inline Poly difference_quotient(const Poly& f, VarKind K, int i, VarKind yk, VarKind zk) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        int ei = m.exponent({K, i});
        if (ei == 0) continue;
        Monomial outer;
        for (const auto& [v, e] : m.terms()) {
            if (v.kind != K) outer = outer * Monomial::var(v, e);
            else if (v.idx < i) outer = outer * Monomial::var({zk, v.idx}, e);
            else if (v.idx > i) outer = outer * Monomial::var({yk, v.idx}, e);
        }
        for (int a = 0; a <= ei - 1; ++a) {
            int b = ei - 1 - a;
            Monomial mid = Monomial::var({yk, i}, a) * Monomial::var({zk, i}, b);
            r.add_term(outer * mid, c);
        }
    }
    return r;
}

}  // namespace hhalg
