#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqindex/curvature.hpp"

namespace eqindex {

/// Homogeneous model manifold with exact invariant curvature and volume.
/// Invariant forms integrate as top coefficient times volume.
struct ModelManifold {
    std::string name;
    int n = 0;
    CurvatureData curvature = CurvatureData::flat(2);
    QPiScalar volume;
    std::optional<long> signature;  // oracle metadata
    std::optional<long> euler;      // oracle metadata
};

/// Built-in catalog: unit s2, unit s4, cp2 (Fubini-Study, holomorphic
/// sectional curvature 4), flat t4, and the product s2xs2.
const std::vector<ModelManifold>& catalog();

/// Lookup by name in the catalog plus any extra models; throws on miss.
const ModelManifold& find_model(const std::string& name,
                                const std::vector<ModelManifold>& extra = {});

/// Integral of an invariant form: top coefficient times volume.
QPiScalar integrate(const FormPoly& form, const ModelManifold& m);

/// Riemannian product: block-diagonal curvature, product volume.
ModelManifold product(const ModelManifold& m1, const ModelManifold& m2);

/// Parses the plain-text model table format (see README); rejects tables
/// whose curvature violates antisymmetry or the Bianchi identity.
std::vector<ModelManifold> load_models(std::istream& in);
std::vector<ModelManifold> load_models_file(const std::string& path);

/// Parses "4*pi", "8/3*pi^2", "1/2*pi^2", "7" into an exact scalar.
QPiScalar parse_volume(const std::string& text);

}  // namespace eqindex
