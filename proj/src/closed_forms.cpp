#include "polyjoin/closed_forms.hpp"

#include <stdexcept>

namespace polyjoin {

mpz_class binom(long long p, long long q) {
    if (q < 0 || p < q) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    return r;
}

mpz_class ln_term_multiplicity(long long n, long long k, long long r) {
    return binom(k + 1, n - 2 * k - 3 * r + 1) * binom(k + r, r);
}

NormalForm polyjoin_Ln(long long n) {
    if (n < 1) throw std::invalid_argument("polyjoin_Ln: n must be >= 1");
    const JoinTerm x = term_atom("X");
    if (n == 1) return nf_atom("X");
    if (n == 2) {
        NormalForm nf;
        nf.add_term(x, 2);
        nf.extra_components = 1;
        return nf;
    }
    if (n == 3) {
        NormalForm nf;
        JoinTerm xx = x;
        xx.powers["X"] = 2;
        nf.add_term(xx, 1);
        nf.add_term(x, 1);
        nf.extra_components = 1;
        return nf;
    }
    NormalForm nf;
    for (long long r = 0; 3 * r <= n + 1; ++r) {
        long long kmin = std::max((n - 3 * r + 2) / 3, 0LL);  // ceil((n-3r)/3)
        long long kmax = (n - 3 * r + 1) / 2;
        for (long long k = kmin; k <= kmax; ++k) {
            mpz_class mult = ln_term_multiplicity(n, k, r);
            if (mult == 0) continue;
            JoinTerm t;
            t.susp = static_cast<int>(r);
            if (k > 0) t.powers["X"] = static_cast<int>(k);
            nf.add_term(t, mult);
        }
    }
    return nf;
}

BettiVector SphereCountTable::to_betti() const {
    BettiVector v;
    for (const auto& [d, c] : spheres) v.add(d, c);
    v.add(0, mpz_of(extra_components));
    return v;
}

SphereCountTable lex_Lm_spheres(long long m, const mpz_class& n, long long k) {
    if (m < 1) throw std::invalid_argument("lex_Lm_spheres: m must be >= 1");
    if (n < 0 || k < 0) throw std::invalid_argument("lex_Lm_spheres: n, k must be >= 0");
    SphereCountTable t;
    if (m == 1) {
        if (n > 0) t.spheres[static_cast<int>(k)] = n;
        return t;
    }
    if (m == 2) {
        if (n > 0) t.spheres[static_cast<int>(k)] = 2 * n;
        t.extra_components = 1;
        return t;
    }
    if (m == 3) {
        if (n > 0) {
            t.spheres[static_cast<int>(2 * k + 1)] = n * n;
            t.spheres[static_cast<int>(k)] += n;
        }
        t.extra_components = 1;
        return t;
    }
    // Largest supported degree: d = p(k+1) - 1 + r with p <= (m+1)/2 and
    // r <= (m+1)/3 (binomial support of the L_m multiplicities).
    const long long d_cap = ((m + 1) / 2) * (k + 1) + (m + 1) / 3;
    for (long long d = 0; d <= d_cap; ++d) {
        mpz_class count = 0;
        mpz_class npow = 1;  // n^p, with n^0 = 1 also for n = 0
        for (long long p = 0; p * k <= d + 1 && p <= d - p * k + 1; ++p) {
            count += npow * binom(p + 1, 3 * (d - p * k + 1) - m) * binom(d - p * k + 1, p);
            npow *= n;
        }
        if (count != 0) t.spheres[static_cast<int>(d)] = count;
    }
    return t;
}

SphereCountTable kozlov_cycle(long long n) {
    if (n < 3) throw std::invalid_argument("kozlov_cycle: n must be >= 3");
    SphereCountTable t;
    long long k = n / 3;
    switch (n % 3) {
        case 0: t.spheres[static_cast<int>(k - 1)] = 2; break;
        case 1: t.spheres[static_cast<int>(k - 1)] = 1; break;
        default: t.spheres[static_cast<int>(k)] = 1; break;
    }
    return t;
}

}  // namespace polyjoin
