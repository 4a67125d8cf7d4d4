#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "eqindex/irrep.hpp"
#include "eqindex/models.hpp"

namespace eqindex {

/// Formal Gaussian-rational combination of words in the fixed su(N)
/// basis, regarded as a distribution supported at the identity.
struct EnvElement {
    static constexpr int kMaxWordLength = 8;

    std::vector<std::pair<GRational, std::vector<int>>> terms;

    static EnvElement one() { return EnvElement{{{GRational(1), {}}}}; }
    static EnvElement generator(int index) { return EnvElement{{{GRational(1), {index}}}}; }
    static EnvElement word(const std::vector<int>& w, const GRational& c = GRational(1));

    /// The quadratic Casimir sum_{a,b} graminv[a][b] X_a X_b.
    static EnvElement casimir(int N);

    void validate() const;
};

/// The primitive root of unity generating Z(SU(N)) as a Gaussian rational;
/// supported for N in {1, 2, 4}.
GRational central_root(int N, int exponent);

/// Test function on SU(N): either a finite combination of normalized
/// irreducible characters or a flat bump supported on central elements,
/// optionally left-translated by a central element omega^translate.
struct TestFunction {
    enum class Kind { CharacterSum, CentralBump };

    Kind kind = Kind::CharacterSum;
    int N = 0;
    ClassFunction characters;                // CharacterSum payload
    std::map<int, GRational> bump_values;    // CentralBump: exponent -> value
    bool flat = true;                        // all derivatives vanish on supp
    int translate = 0;                       // lambda_{omega^translate}

    static TestFunction character(int N, const Partition& p, int translate = 0);
    static TestFunction character_sum(const ClassFunction& f, int translate = 0);
    static TestFunction unit_bump_at_identity(int N);
    static TestFunction bump(int N, std::map<int, GRational> values, bool flat = true);
};

/// <a, phi> = (lambda(a) phi)(e) with the convention
/// lambda(X) phi (g) = d/dt|_0 phi(exp(-tX) g).  For a basis word this is
/// (-1)^k Tr(pi(X_{ik} ... X_{i1})) / d_pi per character, extended
/// bilinearly.  Bumps are rejected; they pair only through distributions.
GRational env_pair(const EnvElement& a, const TestFunction& phi, int max_boxes = 6);

/// Both sides of the central decomposition identity
///   sum_{pi nat} Tr(pi(a)) Tr(conj(pi)(phi))
///     = (1/N) sum_{g in Z} chi_nat(g) <T(a), lambda_g phi>,
/// with <T(a), .> evaluated through Tr(pi(T(a))) = Tr(pi(a)), i.e. without
/// materializing the conditional expectation T.
std::pair<GRational, GRational> lemma_both_sides(const EnvElement& a, const TestFunction& phi,
                                                 int N, int max_boxes);

/// The index distribution of a model: pairing rules against class
/// functions and flat central bumps, backed by the per-degree spectral
/// data I_j(pi).
class IndexDistribution {
public:
    IndexDistribution(ModelManifold model, int max_boxes,
                      bool corollary_as_printed = false);

    const ModelManifold& model() const { return model_; }
    int N() const { return N_; }
    int max_boxes() const { return max_boxes_; }

    /// <ind, chi^p>: zero for partitions outside the natural central
    /// class, otherwise d_pi sum_j I_j(pi).
    Rational pair_with_character(const Partition& p) const;

    /// Pairing against a flat central bump: sum_g w(g) phi(g) * integral
    /// of the A-hat form, with unit central weights.  With the
    /// as-printed flag the corollary's sum over the center is evaluated
    /// literally; for flat bumps the two routes coincide.
    Rational pair_with_bump(const TestFunction& bump) const;

    /// Spectral data I_j(pi), j = 0..n/2, computed lazily and cached.
    const std::vector<Rational>& spectral_data(const Partition& p) const;

private:
    ModelManifold model_;
    int N_;
    int max_boxes_;
    bool as_printed_;
    mutable std::mutex mu_;
    mutable std::map<Partition, std::vector<Rational>> cache_;
};

}  // namespace eqindex
