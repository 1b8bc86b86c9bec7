#include "eprsim/vec3.hpp"

#include <stdexcept>

namespace eprsim {

UnitVec3 UnitVec3::checked(const Vec3& v) {
    const double n = v.norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > kTolerance)
        throw std::invalid_argument("vector is not of unit norm");
    return UnitVec3(v);
}

UnitVec3 UnitVec3::normalize(const Vec3& v) {
    const double n = v.norm();
    if (!std::isfinite(n) || n == 0.0) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    return UnitVec3(v * (1.0 / n));
}

}  // namespace eprsim
