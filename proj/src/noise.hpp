#pragma once

#include <array>
#include <functional>
#include <vector>

#include "field.hpp"
#include "mesh.hpp"
#include "vec.hpp"

namespace sllg {

/// Noise direction g together with its first and second derivatives sampled
/// at the mesh nodes. |g(x_n)| = 1 at every node. Two construction routes:
/// a constant unit vector, or a user-supplied analytic triple (g, grad g,
/// laplacian g). g without derivatives is rejected rather than numerically
/// differentiated.
class NoiseCoefficient {
public:
    static NoiseCoefficient constant(const Mesh& mesh, Vec3 g);
    static NoiseCoefficient analytic(
        const Mesh& mesh, const std::function<Vec3(Vec2)>& g,
        const std::function<std::array<Vec3, 2>(Vec2)>& grad_g,
        const std::function<Vec3(Vec2)>& lap_g);

    bool is_constant() const { return constant_; }
    const NodalField& g() const { return g_; }
    const std::vector<std::array<Vec3, 2>>& grad_g() const { return grad_g_; }
    const NodalField& lap_g() const { return lap_g_; }
    const Mesh& mesh() const { return g_.mesh(); }

private:
    NoiseCoefficient() = default;
    bool constant_ = false;
    NodalField g_;
    std::vector<std::array<Vec3, 2>> grad_g_;  // per node, columns d g / d x_i
    NodalField lap_g_;
};

/// Nodewise u(x_n) x g(x_n).
NodalField cross_g(const NodalField& u, const NoiseCoefficient& nc);

/// Pointwise rotation u + sin(s) (u x g) + (1 - cos(s)) ((u x g) x g);
/// preserves the modulus at every node when |g| = 1.
Vec3 rotate_about_axis(double s, Vec3 u, Vec3 g);
NodalField rotate_about_g(double s, const NodalField& u, const NoiseCoefficient& nc);

/// Commutator of the Laplacian with the g-cross operator on P1 fields:
///   u x I(lap g) + 2 sum_i (du/dx_i) x I(dg/dx_i).
/// The gradient term is element-constant (with I(dg/dx_i) taken at element
/// centroids) and is area-averaged back to the nodes so the result stays in
/// the P1 space.
NodalField laplace_commutator(const NodalField& u, const NoiseCoefficient& nc);

/// Forcing term of the transformed equation at noise level w = W(t_j):
///   lambda2^2 u x (u x Ct) - lambda1^2 Ct, where
///   D  = sin(w) C u + (1 - cos(w)) (G C u + C G u),
///   Ct = D - sin(w) G D + (1 - cos(w)) G^2 D.
/// Identically zero for constant g and for w = 0.
NodalField noise_forcing(double w, const NodalField& u, const NoiseCoefficient& nc,
                         double lambda1, double lambda2);

/// Direct 3x3 solve of lambda1 phi + lambda2 (phi x zeta) = psi for unit
/// zeta. Throws std::invalid_argument when lambda1 = 0 or | |zeta| - 1 |
/// exceeds 1e-9.
Vec3 cross_shift_solve(double lambda1, double lambda2, Vec3 zeta, Vec3 psi);

/// The system matrix of the cross-shift solve (exposed for its determinant
/// identity det = lambda1 (lambda1^2 + lambda2^2)).
Mat3 cross_shift_matrix(double lambda1, double lambda2, Vec3 zeta);

}  // namespace sllg
