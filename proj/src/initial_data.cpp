#include "initial_data.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace sllg {

Vec3 initial_magnetization(Vec2 x) {
    if (x.x < -0.5 || x.x > 0.5 || x.y < -0.5 || x.y > 0.5)
        throw std::domain_error("initial_magnetization: point outside the unit square");

    const Vec2 xs = 2.0 * x;
    const double r = norm(xs);
    if (r >= 1.0) {
        return {-xs.x / r, -xs.y / r, 0.0};
    }
    const double a = std::pow(1.0 - 2.0 * r, 4);
    const double denom = a * a + r * r;
    const double sign = (r < 0.5) ? 1.0 : -1.0;
    return {sign * 2.0 * xs.x * a / denom,
            sign * 2.0 * xs.y * a / denom,
            (a * a - r * r) / denom};
}

NoiseCoefficient make_noise_coefficient(const Mesh& mesh, const std::string& spec) {
    if (spec == "helix") {
        const double w = std::numbers::pi;
        auto g = [w](Vec2 x) -> Vec3 {
            return {std::cos(w * x.y), std::sin(w * x.y), 0.0};
        };
        auto grad = [w](Vec2 x) -> std::array<Vec3, 2> {
            return {Vec3{0.0, 0.0, 0.0},
                    Vec3{-w * std::sin(w * x.y), w * std::cos(w * x.y), 0.0}};
        };
        auto lap = [w](Vec2 x) -> Vec3 {
            return {-w * w * std::cos(w * x.y), -w * w * std::sin(w * x.y), 0.0};
        };
        return NoiseCoefficient::analytic(mesh, g, grad, lap);
    }

    std::istringstream in(spec);
    Vec3 g;
    char c1 = 0, c2 = 0;
    if (!(in >> g.x >> c1 >> g.y >> c2 >> g.z) || c1 != ',' || c2 != ',')
        throw ConfigError("unrecognized g spec '" + spec +
                          "' (expected \"gx,gy,gz\" or a catalog id)");
    std::string rest;
    if (in >> rest) throw ConfigError("trailing characters in g spec '" + spec + "'");
    return NoiseCoefficient::constant(mesh, g);
}

}  // namespace sllg
