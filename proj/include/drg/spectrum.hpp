#ifndef DRG_SPECTRUM_HPP
#define DRG_SPECTRUM_HPP

#include "drg/intersection_array.hpp"
#include "drg/numberfield.hpp"

namespace drg {

// Spectrum of a distance-regular graph: eigenvalues theta_0 > ... > theta_d
// of the intersection matrix B_1, their cosine sequences, and the
// multiplicities. All eigenvalues live in a single shared number field
// (null when they are all rational); eigenvalues generating a field of
// degree >= 3, or two distinct irrational fields, are not supported.
struct Spectrum {
    FieldPtr field;
    std::vector<AlgebraicNumber> eigenvalues;       // descending
    std::vector<NFElem> thetas;                     // same values, as field elements
    std::vector<std::vector<NFElem>> cosines;       // [i][j] = u_j(theta_i)
    std::vector<Rat> mults;                         // exact rational multiplicities

    int d() const { return static_cast<int>(thetas.size()) - 1; }
};

// Characteristic polynomial of B_1 (monic).
PolyQ char_poly(const IntersectionArray& ia);

// Spectrum without the integrality validation of the multiplicities
// (they are still required to be rational and positive).
Spectrum spectrum_raw(const IntersectionArray& ia);

// Validated spectrum: each multiplicity a positive integer, m_0 = 1,
// sum of multiplicities = n. Violations raise InfeasibleError.
Spectrum spectrum(const IntersectionArray& ia);

using NFMatrix = std::vector<std::vector<NFElem>>;

// First and second eigenmatrices. P[i][j] = k_j * u_j(theta_i),
// Q[i][j] = m_j * u_i(theta_j); P * Q = n * I. An optional permutation
// sigma of {0..d} reorders the eigenvalue indices: row i of P (and
// column j of Q) refers to theta_{sigma(i)}.
struct Eigenmatrices {
    NFMatrix P, Q;
};
Eigenmatrices eigenmatrices(const IntersectionArray& ia, const Spectrum& sp,
                            const std::vector<int>& perm = {});

bool is_formally_self_dual(const IntersectionArray& ia);

// Krein parameters q^h_ij, indexed (h, i, j), under an optional
// eigenvalue permutation. Entries are exact rationals; a negative entry
// raises InfeasibleError.
using KreinTensor = Array3D<Rat>;
KreinTensor krein(const IntersectionArray& ia, const Spectrum& sp,
                  const std::vector<int>& perm = {});

}  // namespace drg

#endif
