#pragma once

#include <vector>

#include "eqindex/clifford.hpp"
#include "eqindex/irrep.hpp"
#include "eqindex/matform.hpp"

namespace eqindex {

/// Constant curvature data of a homogeneous model in a fixed orthonormal
/// frame: the antisymmetric matrix of 2-forms R_ij with components
/// R(k,l,i,j) = <R(e_k,e_l) e_i, e_j>.  Construction validates
/// antisymmetry and the first Bianchi identity.
class CurvatureData {
public:
    struct Component {
        int k, l, i, j;  // 1-based, k < l, i < j
        Rational value;
    };

    CurvatureData(int n, std::vector<FormPoly> entries);

    static CurvatureData from_table(int n, const std::vector<Component>& comps);
    static CurvatureData flat(int n);

    int dimension() const { return n_; }
    const FormPoly& entry(int i, int j) const;  // 0-based R_ij

    /// Signed component R(k,l,i,j) for arbitrary index order (0-based).
    QPiScalar component(int k, int l, int i, int j) const;

    /// Components re-expressed after an orthogonal change of frame.
    CurvatureData rotate_frame(const std::vector<std::vector<Rational>>& q) const;

private:
    int n_;
    std::vector<FormPoly> entries_;
};

/// Pontryagin forms p_1, p_2, ... defined by det(I + t R/(2 pi))
/// = sum_k p_k t^{2k}; p_k has exterior degree 4k, listed while 4k <= n.
std::vector<FormPoly> pontryagin_forms(const CurvatureData& r);

/// The universal A-hat polynomial in the Pontryagin forms, truncated at
/// degree n.  Series table stored through degree 8:
/// 1 - p1/24 + (7 p1^2 - 4 p2)/5760.
FormPoly ahat_form(const CurvatureData& r);

/// Hirzebruch L-polynomial 1 + p1/3 + (7 p2 - p1^2)/45, truncated at n.
FormPoly l_genus(const CurvatureData& r);

/// Pfaffian Euler form of R/(2 pi); supported for n in {2, 4}.
FormPoly euler_form(const CurvatureData& r);

/// Spin curvature Omega = (1/4) sum_{i,j} R_ij c_i c_j as an N x N matrix
/// of 2-forms; coefficient matrices are traceless skew-hermitian.
MatForm omega_form(const CurvatureData& r, const CliffordModel& cliff);

/// Orientation of the Chern-Weil exponent in rel_chern.  The magnitude of
/// the normalization (the i/(2 pi) in omega_twisted) and this sign are
/// anchored by signature(CP^2) = 1 for the natural representation.
inline constexpr int kRelChernOrientation = 1;

/// The curvature in Chern-Weil normalization pushed through the given
/// representation: entries of pi(i * Omega / (2 pi)) as a d_pi x d_pi
/// matrix of 2-forms.
MatForm omega_twisted(const Irrep& rep, const CurvatureData& r, const CliffordModel& cliff);

/// Relative Chern character form sum_j tr(pi(i Omega / 2 pi)^j) / j!.
/// Degree-0 component equals d_pi.
FormPoly rel_chern(const Irrep& rep, const CurvatureData& r, const CliffordModel& cliff);

}  // namespace eqindex
