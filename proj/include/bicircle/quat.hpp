#pragma once

#include <iosfwd>
#include <string>

#include "bicircle/rat.hpp"

namespace bicircle {

/// Quaternion re + x*i + y*j + z*k over exact rationals.
///
/// Multiplication follows the Hamilton table ij = k, jk = i, ki = j.
/// Values are immutable in spirit: all operations return fresh quaternions.
struct Quat {
    Rat re, x, y, z;

    Quat() = default;
    Quat(Rat re_, Rat x_, Rat y_, Rat z_)
        : re(std::move(re_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Quat(long scalar) : re(scalar) {}
    explicit Quat(Rat scalar) : re(std::move(scalar)) {}

    static Quat zero() { return Quat(); }
    static Quat one() { return Quat(1); }
    static Quat i() { return Quat(Rat(0), Rat(1), Rat(0), Rat(0)); }
    static Quat j() { return Quat(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static Quat k() { return Quat(Rat(0), Rat(0), Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    Quat operator-() const { return Quat(-re, -x, -y, -z); }

    friend Quat operator+(const Quat& a, const Quat& b) {
        return Quat(a.re + b.re, a.x + b.x, a.y + b.y, a.z + b.z);
    }
    friend Quat operator-(const Quat& a, const Quat& b) {
        return Quat(a.re - b.re, a.x - b.x, a.y - b.y, a.z - b.z);
    }
    friend Quat operator*(const Quat& p, const Quat& q) {
        return Quat(p.re * q.re - p.x * q.x - p.y * q.y - p.z * q.z,
                    p.re * q.x + p.x * q.re + p.y * q.z - p.z * q.y,
                    p.re * q.y - p.x * q.z + p.y * q.re + p.z * q.x,
                    p.re * q.z + p.x * q.y - p.y * q.x + p.z * q.re);
    }
    friend Quat operator*(const Rat& s, const Quat& q) {
        return Quat(s * q.re, s * q.x, s * q.y, s * q.z);
    }
    friend Quat operator*(const Quat& q, const Rat& s) { return s * q; }

    friend bool operator==(const Quat& a, const Quat& b) {
        return a.re == b.re && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

    Quat conj() const { return Quat(re, -x, -y, -z); }
    Rat norm_sq() const { return re * re + x * x + y * y + z * z; }
    Rat re_part() const { return re; }
    Quat im_part() const { return Quat(Rat(0), x, y, z); }

    Quat inv() const {
        Rat n = norm_sq();
        if (n.is_zero()) fail(errc::zero_division, "inverse of zero quaternion");
        Rat ni = n.inv();
        return Quat(re * ni, -(x * ni), -(y * ni), -(z * ni));
    }

    std::string to_string() const;
};

/// Euclidean dot product of the imaginary parts as 3-vectors.
inline Rat im_dot(const Quat& p, const Quat& q) {
    return p.x * q.x + p.y * q.y + p.z * q.z;
}

/// Cross product of the imaginary parts; purely imaginary result.
inline Quat im_cross(const Quat& p, const Quat& q) {
    return Quat(Rat(0), p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x);
}

std::ostream& operator<<(std::ostream& os, const Quat& q);

} // namespace bicircle
