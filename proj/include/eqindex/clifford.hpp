#pragma once

#include <vector>

#include "eqindex/gmatrix.hpp"

namespace eqindex {

/// Concrete Clifford algebra Cliff(R^n) for even n, realized as N x N
/// matrices with N = 2^{n/2}.  Convention: c_i c_j + c_j c_i = -2 delta_ij,
/// with skew-hermitian generators (c_i^* = -c_i).
struct CliffordModel {
    int n = 0;
    int N = 0;
    std::vector<GMatrix> generators;
    GMatrix chirality;

    /// c(v) = sum_i v_i c_i for a rational vector.
    GMatrix clifford_vector(const std::vector<Rational>& v) const;
};

/// Builds the model by the iterated 2x2 tensor construction; checks all
/// structural invariants (relations, skewness, chirality, full span).
CliffordModel build_clifford(int n);

/// Infinitesimal spin embedding so(n) -> su(N):
/// A |-> (1/4) sum_{i,j} A_ij c_i c_j for antisymmetric rational A.
GMatrix spin_embed(const CliffordModel& model, const GMatrix& a);

/// Verifies the derivation identity [spin_embed(A), c(v)] = c(Av), the
/// infinitesimal form of the conjugation action on Clifford vectors.
bool adjoint_action_check(const CliffordModel& model, const GMatrix& a,
                          const std::vector<Rational>& v);

}  // namespace eqindex
