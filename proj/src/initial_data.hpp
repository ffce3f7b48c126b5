#pragma once

#include <string>

#include "mesh.hpp"
#include "noise.hpp"
#include "vec.hpp"

namespace sllg {

/// Built-in initial magnetization on D = [-0.5, 0.5]^2: a vortex-like unit
/// field, continuous across its radial branches. Throws std::domain_error
/// outside D.
Vec3 initial_magnetization(Vec2 x);

/// Noise direction from a CLI/config spec: either "gx,gy,gz" (constant, the
/// vector is normalized) or a catalog id. Catalog: "helix" is the in-plane
/// unit field (cos(pi y), sin(pi y), 0) with analytic derivatives.
NoiseCoefficient make_noise_coefficient(const Mesh& mesh, const std::string& spec);

}  // namespace sllg
