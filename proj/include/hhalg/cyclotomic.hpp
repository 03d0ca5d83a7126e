#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_L).
//
// A CycField fixes L once and precomputes the minimal polynomial Phi_L
// together with the basis expansion of every power zeta^0 .. zeta^(L-1).
// A CycNum is a coefficient vector over the power basis 1, zeta, ...,
// zeta^(phi(L)-1); it keeps a shared_ptr to its field so values from
// different fields can coexist (mixing them without embed() is an error).
//
// A default-constructed CycNum is the field-less zero: it acts as the
// additive identity for any field and absorbs under multiplication. This
// keeps accumulation loops free of field plumbing.

#include "numbers.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hhalg {

namespace qpoly {

// dense polynomials over Q, coefficient of x^i at index i
using QP = std::vector<Rat>;

inline QP trim(QP p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline long deg(const QP& p) { return static_cast<long>(p.size()) - 1; }

inline QP mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return trim(std::move(r));
}

// returns {quotient, remainder}; b must be nonzero
inline std::pair<QP, QP> divmod(QP a, const QP& b) {
    a = trim(std::move(a));
    if (b.empty()) throw std::runtime_error("qpoly: division by zero");
    QP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        Rat c = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return {trim(std::move(q)), std::move(a)};
}

inline QP divexact(const QP& a, const QP& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw std::runtime_error("qpoly: division not exact");
    return q;
}

// x^m - 1
inline QP xm_minus_1(long m) {
    QP p(m + 1, Rat(0));
    p[0] = -1;
    p[m] = 1;
    return p;
}

}  // namespace qpoly

// Phi_m for every divisor m of n can be built bottom-up:
// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline qpoly::QP cyclotomic_polynomial(long m) {
    std::map<long, qpoly::QP> phi;
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        qpoly::QP p = qpoly::xm_minus_1(d);
        for (auto& [e, ph] : phi)
            if (d % e == 0) p = qpoly::divexact(p, ph);
        phi[d] = std::move(p);
    }
    return phi[m];
}

inline long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

class CycField {
public:
    explicit CycField(long L) : L_(L) {
        if (L < 1) throw std::invalid_argument("CycField: order must be positive");
        phi_ = cyclotomic_polynomial(L);
        deg_ = qpoly::deg(phi_);
        // zeta^deg expressed over the basis (Phi_L is monic)
        std::vector<Rat> ztop(deg_);
        for (long i = 0; i < deg_; ++i) ztop[i] = -phi_[i];
        zpow_.resize(L_);
        zpow_[0].assign(deg_, Rat(0));
        zpow_[0][0] = 1;
        for (long e = 1; e < L_; ++e) {
            const auto& prev = zpow_[e - 1];
            std::vector<Rat> cur(deg_, Rat(0));
            Rat top = prev[deg_ - 1];
            for (long i = 1; i < deg_; ++i) cur[i] = prev[i - 1];
            if (top != 0)
                for (long i = 0; i < deg_; ++i) cur[i] += top * ztop[i];
            zpow_[e] = std::move(cur);
        }
    }

    long order() const { return L_; }
    long degree() const { return deg_; }
    const qpoly::QP& minimal_poly() const { return phi_; }
    // zeta^e over the power basis, e taken mod L
    const std::vector<Rat>& zeta_power(long e) const { return zpow_[mod_norm(e, L_)]; }

private:
    long L_;
    long deg_;
    qpoly::QP phi_;
    std::vector<std::vector<Rat>> zpow_;
};

using FieldPtr = std::shared_ptr<const CycField>;

inline FieldPtr make_cyclotomic_field(long L) { return std::make_shared<const CycField>(L); }

class CycNum {
public:
    CycNum() = default;  // field-less zero

    static CycNum zero() { return CycNum(); }

    static CycNum rational(FieldPtr F, Rat v) {
        CycNum x;
        if (v == 0) return x;
        x.F_ = std::move(F);
        x.c_.assign(x.F_->degree(), Rat(0));
        x.c_[0] = std::move(v);
        return x;
    }

    static CycNum zeta(FieldPtr F, long e) {
        CycNum x;
        x.c_ = F->zeta_power(e);
        x.F_ = std::move(F);
        return x;
    }

    bool is_zero() const {
        if (!F_) return true;
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        if (!F_) return true;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat rational_value() const {
        if (!F_) return Rat(0);
        if (!is_rational()) throw std::runtime_error("CycNum: not a rational value");
        return c_[0];
    }

    FieldPtr field() const { return F_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        if (!a.F_) return b;
        if (!b.F_) return a;
        check_same(a, b);
        CycNum r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

    CycNum operator-() const {
        CycNum r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        if (!a.F_ || !b.F_) return CycNum();
        check_same(a, b);
        const long d = a.F_->degree();
        // convolution, then fold exponents >= d through the power table
        std::vector<Rat> full(2 * d - 1, Rat(0));
        for (long i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j < d; ++j)
                if (b.c_[j] != 0) full[i + j] += a.c_[i] * b.c_[j];
        }
        CycNum r;
        r.F_ = a.F_;
        r.c_.assign(d, Rat(0));
        for (long i = 0; i < d; ++i) r.c_[i] = full[i];
        for (long e = d; e <= 2 * d - 2; ++e) {
            if (full[e] == 0) continue;
            const auto& z = a.F_->zeta_power(e);
            for (long i = 0; i < d; ++i) r.c_[i] += full[e] * z[i];
        }
        return r;
    }

    friend CycNum operator*(const CycNum& a, const Rat& s) {
        if (s == 0) return CycNum();
        CycNum r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend CycNum operator*(const Rat& s, const CycNum& a) { return a * s; }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum inverse() const {
        if (is_zero()) throw std::runtime_error("CycNum: inverse of zero");
        // extended Euclid in Q[x] against the minimal polynomial
        qpoly::QP r0 = F_->minimal_poly(), r1 = qpoly::trim(c_);
        qpoly::QP t0, t1 = {Rat(1)};
        while (!r1.empty()) {
            auto [q, rem] = qpoly::divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            qpoly::QP t2 = t0;
            // t2 = t0 - q*t1
            qpoly::QP qt = qpoly::mul(q, t1);
            if (t2.size() < qt.size()) t2.resize(qt.size(), Rat(0));
            for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
            t0 = std::move(t1);
            t1 = qpoly::trim(std::move(t2));
        }
        if (qpoly::deg(r0) != 0)
            throw std::runtime_error("CycNum: gcd with minimal polynomial not constant");
        CycNum inv;
        inv.F_ = F_;
        inv.c_.assign(F_->degree(), Rat(0));
        for (size_t i = 0; i < t0.size() && i < inv.c_.size(); ++i) inv.c_[i] = t0[i] / r0[0];
        return inv;
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        if (!F_) return e == 0 ? CycNum() : CycNum();  // 0^0 undefined; engine never hits it
        CycNum base = *this, r = CycNum::rational(F_, 1);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // the automorphism zeta -> zeta^k, gcd(k, L) = 1
    CycNum galois(long k) const {
        if (!F_) return CycNum();
        long L = F_->order();
        if (gcd_long(mod_norm(k, L), L) != 1)
            throw std::invalid_argument("CycNum::galois: k not coprime to order");
        CycNum r;
        r.F_ = F_;
        r.c_.assign(F_->degree(), Rat(0));
        for (long i = 0; i < F_->degree(); ++i) {
            if (c_[i] == 0) continue;
            const auto& z = F_->zeta_power(i * k);
            for (long j = 0; j < F_->degree(); ++j) r.c_[j] += c_[i] * z[j];
        }
        return r;
    }

    CycNum conj() const { return galois(-1); }

    // re-express in a bigger field, target order divisible by this order
    CycNum embed(const FieldPtr& target) const {
        if (!F_) return CycNum();
        long L = F_->order(), M = target->order();
        if (M % L != 0) throw std::invalid_argument("CycNum::embed: incompatible field orders");
        long step = M / L;
        CycNum r;
        r.F_ = target;
        r.c_.assign(target->degree(), Rat(0));
        for (long i = 0; i < F_->degree(); ++i) {
            if (c_[i] == 0) continue;
            const auto& z = target->zeta_power(i * step);
            for (long j = 0; j < target->degree(); ++j) r.c_[j] += c_[i] * z[j];
        }
        return r;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        if (!a.F_ || !b.F_) return a.is_zero() && b.is_zero();
        check_same(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat c = c_[i];
            if (!first) {
                s += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            } else if (c < 0 && i > 0) {
                s += "-";
                c = -c;
            }
            bool unit_coeff = (c == 1 && i > 0) || (c == -1 && i > 0 && first);
            if (i == 0) {
                s += rat_str(c);
            } else {
                if (!unit_coeff) {
                    std::string cs = rat_str(c);
                    if (cs.find('/') != std::string::npos) cs = "(" + cs + ")";
                    s += cs + "*";
                } else if (c == -1) {
                    s += "-";
                }
                s += "z" + std::to_string(F_->order());
                if (i > 1) s += "^" + std::to_string(i);
            }
            first = false;
        }
        return s;
    }

private:
    static void check_same(const CycNum& a, const CycNum& b) {
        if (a.F_->order() != b.F_->order())
            throw std::runtime_error("CycNum: mixing different cyclotomic fields");
    }

    FieldPtr F_;
    std::vector<Rat> c_;
};

}  // namespace hhalg
