#pragma once

#include <map>
#include <vector>

#include "eqindex/gmatrix.hpp"
#include "eqindex/partitions.hpp"

namespace eqindex {

/// Explicit matrix realization of an irreducible SU(N) representation,
/// carved out of (C^N)^{tensor boxes} by a Young symmetrizer.  lie_images
/// follow the su_basis order; all entries are exact Gaussian rationals.
/// The basis of the carved-out module is echelon rather than orthonormal,
/// so the invariant inner product is carried along as gram; every image M
/// is skew-adjoint for it: gram M = -conj(M)^T gram.
struct Irrep {
    Partition partition;
    int N = 0;
    long dim = 0;
    int central_char = 0;
    std::vector<GMatrix> lie_images;
    GMatrix gram;      // invariant positive Hermitian form on the module
    Rational casimir;  // scalar by which the quadratic Casimir acts

    /// d_pi applied to an arbitrary su(N) element, by exact decomposition
    /// in the fixed basis.
    GMatrix act(const GMatrix& x) const;

    /// Trace of pi(X_{w0} X_{w1} ...) for a word of basis indices.
    GRational trace_word(const std::vector<int>& word) const;
};

/// Casimir eigenvalue <lambda, lambda + 2 rho> in the normalization of
/// su_gram (Casimir of the natural SU(2) representation = 3/4).
Rational casimir_eigenvalue(const Partition& p, int N);

/// Builds the irrep and verifies its invariants (dimension, bracket
/// fidelity on all basis pairs, tracelessness, skew-hermiticity, scalar
/// Casimir).  max_boxes guards the tensor-space size.
Irrep build_irrep(const Partition& p, int N, int max_boxes = 6);

/// Process-wide cache; safe for concurrent readers with single-writer
/// insertion.  Returns a stable reference.
const Irrep& get_irrep(const Partition& p, int N, int max_boxes = 6);

/// Normalized character at a torus element diag(phases).  Phases must be
/// exactly representable unit Gaussian rationals (fourth roots of unity)
/// multiplying to 1.  Evaluated through the Jacobi-Trudi determinant, so
/// coincident phases need no limit handling.
GRational character_at_torus(const Partition& p, const std::vector<GRational>& phases);

/// Finitely supported combination sum coeff_pi * chi^pi of normalized
/// irreducible characters of SU(N).
struct ClassFunction {
    int N = 0;
    std::map<Partition, GRational> coefficients;

    GRational at_identity() const {
        GRational s;
        for (const auto& [p, c] : coefficients) s += c;
        return s;
    }
};

}  // namespace eqindex
