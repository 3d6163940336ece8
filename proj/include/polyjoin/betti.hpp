#pragma once

#include <gmpxx.h>

#include <map>

namespace polyjoin {

/// gmpxx has no long long overloads; long is 64-bit on every platform
/// this project targets.
inline mpz_class mpz_of(long long v) { return mpz_class(static_cast<long>(v)); }

/// Reduced Betti numbers, finitely supported by degree. Degree -1 is
/// nonzero (and equal to 1) only for the empty complex {∅}.
struct BettiVector {
    std::map<int, mpz_class> b;
    bool torsion = false;

    void set(int degree, mpz_class value) {
        if (value != 0) b[degree] = std::move(value);
    }
    mpz_class at(int degree) const {
        auto it = b.find(degree);
        return it == b.end() ? mpz_class(0) : it->second;
    }
    void add(int degree, const mpz_class& value) {
        if (value == 0) return;
        auto [it, fresh] = b.emplace(degree, value);
        if (!fresh) {
            it->second += value;
            if (it->second == 0) b.erase(it);
        }
    }
    bool is_zero() const { return b.empty(); }

    /// Reduced Euler characteristic Σ (-1)^d b_d over d >= 0, minus the
    /// degree -1 contribution.
    mpz_class reduced_euler() const {
        mpz_class chi = 0;
        for (const auto& [d, v] : b) {
            if (d < 0) {
                chi -= v;  // χ̃({∅}) = -1
                continue;
            }
            if (d % 2 == 0)
                chi += v;
            else
                chi -= v;
        }
        return chi;
    }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

}  // namespace polyjoin
