#pragma once

#include <cmath>
#include <complex>

namespace gatedfield {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Complex-valued 3-vector (Fourier coefficients).
struct CVec3 {
    std::complex<double> x{0.0, 0.0}, y{0.0, 0.0}, z{0.0, 0.0};

    std::complex<double>& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const std::complex<double>& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator*(const std::complex<double>& s) const { return {x * s, y * s, z * s}; }

    CVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }

    // unconjugated contraction with a real vector
    std::complex<double> dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

    CVec3 cross(const CVec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    double norm2() const { return std::norm(x) + std::norm(y) + std::norm(z); }

    static CVec3 from_real(const Vec3& v) { return {{v.x, 0.0}, {v.y, 0.0}, {v.z, 0.0}}; }
};

inline CVec3 operator*(const std::complex<double>& s, const CVec3& v) { return v * s; }

} // namespace gatedfield
