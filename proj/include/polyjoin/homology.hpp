#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "polyjoin/betti.hpp"
#include "polyjoin/complex.hpp"

namespace polyjoin {

struct Triplet {
    int32_t row;
    int32_t col;
    long long value;
};

struct SparseIntMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<Triplet> entries;
};

/// Rank and elementary divisors (> 1, in a divisibility chain) of an
/// integer matrix. Divisor 1 pivots are not listed.
struct SNFResult {
    long long rank = 0;
    std::vector<mpz_class> divisors;
};

/// Smith normal form over the integers. Unit-valued pivots are eliminated
/// first (weight-1 rows/columns cascade with zero fill, then minimal-fill
/// unit pivots); the residual core, if any, goes through classical SNF
/// with arbitrary-precision entries.
SNFResult smith_normal_form(const SparseIntMatrix& m);

/// Faces and boundary matrices of a complex, for inspection and tests.
/// boundary[0] is the augmentation map to the empty face; boundary[d]
/// maps d-faces to (d-1)-faces with signs by position parity.
struct ChainComplexData {
    std::vector<std::vector<Bits>> faces;      // faces[d] = dimension-d faces, sorted
    std::vector<SparseIntMatrix> boundary;     // size faces.size(), boundary[d]: C_d -> C_{d-1}
};

ChainComplexData boundary_matrices(const SimplicialComplex& k, long long max_faces = 5'000'000);

/// Exact reduced simplicial homology over Z:
///   b_d = f_d - rank ∂_d - rank ∂_{d+1},
/// with the augmentation included so that b_{-1}({∅}) = 1. The torsion
/// flag is set iff some boundary matrix has an elementary divisor > 1.
BettiVector reduced_homology(const SimplicialComplex& k, long long max_faces = 5'000'000);

}  // namespace polyjoin
