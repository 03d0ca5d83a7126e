#pragma once

// deterministic pseudo-random generators shared by the test suites

#include <hhalg/cyclotomic.hpp>
#include <hhalg/group.hpp>
#include <hhalg/polyring.hpp>

#include <algorithm>
#include <random>

namespace testutil {

using namespace hhalg;

inline CycNum random_cyc(const FieldPtr& F, std::mt19937_64& rng, long bound = 5) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, 3);
    CycNum x = CycNum::zero();
    for (long e = 0; e < F->degree(); ++e)
        x += CycNum::zeta(F, e) * Rat(Int(num(rng)), Int(den(rng)));
    return x;
}

inline CycNum random_cyc_nonzero(const FieldPtr& F, std::mt19937_64& rng, long bound = 5) {
    for (;;) {
        CycNum x = random_cyc(F, rng, bound);
        if (!x.is_zero()) return x;
    }
}

inline Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int nvars, int max_exp,
                        int nterms, VarKind kind = VarKind::X) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    Poly p;
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (int v = 1; v <= nvars; ++v) m = m * Monomial::var({kind, v}, exp(rng));
        p.add_term(m, random_cyc(F, rng, 3));
    }
    return p;
}

inline GroupElement random_group_element(int n, int N, std::mt19937_64& rng) {
    std::vector<int> p(N + 1), d(N + 1, 0);
    for (int k = 0; k <= N; ++k) p[k] = k;
    std::shuffle(p.begin() + 1, p.end(), rng);
    std::uniform_int_distribution<int> de(0, n - 1);
    for (int k = 1; k <= N; ++k) d[k] = de(rng);
    return GroupElement(n, std::move(p), std::move(d));
}

}  // namespace testutil
