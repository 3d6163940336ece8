#pragma once

#include <gmpxx.h>

#include <map>

#include "polyjoin/betti.hpp"
#include "polyjoin/homotopy.hpp"

namespace polyjoin {

/// Binomial coefficient, zero-extended: 0 whenever q < 0 or p < q.
mpz_class binom(long long p, long long q);

/// Multiplicity of Σ^r X^{*k} in the polyhedral join over I(L_n), n >= 4:
/// binom(k+1, n-2k-3r+1) * binom(k+r, r).
mpz_class ln_term_multiplicity(long long n, long long k, long long r);

/// Z*_{I(L_n)}(X, ∅) as a normal form over the single atom "X":
///   n=1: X;  n=2: X ⊔ X;  n=3: X^{*2} ⊔ X;
///   n>=4: wedge of Σ^r X^{*k} with multiplicities ln_term_multiplicity,
/// summed over the window 0 <= r <= (n+1)/3,
/// max{(n-3r)/3, 0} <= k <= (n-3r+1)/2 derived from binomial support.
NormalForm polyjoin_Ln(long long n);

/// Sphere counts by dimension; extra_components mirrors
/// NormalForm.extra_components for the disconnected m = 2, 3 answers.
struct SphereCountTable {
    std::map<int, mpz_class> spheres;
    long long extra_components = 0;

    BettiVector to_betti() const;
    friend bool operator==(const SphereCountTable&, const SphereCountTable&) = default;
};

/// Homotopy type of I(L_m[H]) when |I(H)| is a wedge of n spheres S^k:
///   m=1: ⋁_n S^k;  m=2: (⋁_n S^k) ⊔ (⋁_n S^k);
///   m=3: (⋁_{n²} S^{2k+1}) ⊔ (⋁_n S^k);
///   m>=4: S^d with multiplicity Σ_p n^p binom(p+1, 3(d-pk+1)-m) binom(d-pk+1, p).
SphereCountTable lex_Lm_spheres(long long m, const mpz_class& n, long long k);

/// Kozlov: I(C_n) is ⋁_2 S^{k-1} (n=3k), S^{k-1} (n=3k+1), S^k (n=3k+2).
SphereCountTable kozlov_cycle(long long n);

}  // namespace polyjoin
