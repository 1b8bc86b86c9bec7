#pragma once

#include <cmath>

namespace eprsim {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    constexpr bool operator==(const Vec3&) const = default;
};

/// A direction in R^3. Construction either checks the norm or normalizes.
class UnitVec3 {
public:
    static constexpr double kTolerance = 1e-9;

    /// Throws std::invalid_argument unless |v| = 1 within kTolerance.
    static UnitVec3 checked(const Vec3& v);
    /// Throws std::invalid_argument for a zero or non-finite vector.
    static UnitVec3 normalize(const Vec3& v);

    static constexpr UnitVec3 x_axis() { return UnitVec3(Vec3{1.0, 0.0, 0.0}); }
    static constexpr UnitVec3 y_axis() { return UnitVec3(Vec3{0.0, 1.0, 0.0}); }
    static constexpr UnitVec3 z_axis() { return UnitVec3(Vec3{0.0, 0.0, 1.0}); }

    /// Unit vector in the xy plane at azimuth `angle`.
    static UnitVec3 planar(double angle) { return UnitVec3(Vec3{std::cos(angle), std::sin(angle), 0.0}); }

    constexpr const Vec3& vec() const { return v_; }
    constexpr double x() const { return v_.x; }
    constexpr double y() const { return v_.y; }
    constexpr double z() const { return v_.z; }
    constexpr double dot(const UnitVec3& o) const { return v_.dot(o.v_); }
    constexpr double dot(const Vec3& o) const { return v_.dot(o); }
    constexpr UnitVec3 operator-() const { return UnitVec3(-v_); }

    constexpr bool operator==(const UnitVec3&) const = default;

private:
    constexpr explicit UnitVec3(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

}  // namespace eprsim
