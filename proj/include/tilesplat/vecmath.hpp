#pragma once

// Small fixed-size vector/matrix types used throughout the renderer.
// Row-major matrices, scalar-first quaternions (w, x, y, z).
// Everything is templated on the scalar type: float for the production
// path, double for the high-precision oracle mode.

#include <cmath>
#include <cstddef>

namespace tilesplat {

template <class T>
struct Vec2 {
    T x{}, y{};

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(T s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    T norm() const { return std::sqrt(x * x + y * y); }
};

template <class T>
struct Vec3 {
    T x{}, y{}, z{};

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(T s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator*=(T s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    T dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    T norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        T n = norm();
        return {x / n, y / n, z / n};
    }
    T operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

template <class T>
struct Vec4 {
    T x{}, y{}, z{}, w{};

    Vec4 operator+(const Vec4& o) const { return {x + o.x, y + o.y, z + o.z, w + o.w}; }
    Vec4 operator-(const Vec4& o) const { return {x - o.x, y - o.y, z - o.z, w - o.w}; }
    Vec4 operator*(T s) const { return {x * s, y * s, z * s, w * s}; }
    T dot(const Vec4& o) const { return x * o.x + y * o.y + z * o.z + w * o.w; }
    T norm() const { return std::sqrt(dot(*this)); }
    T operator[](int i) const { return i == 0 ? x : (i == 1 ? y : (i == 2 ? z : w)); }
    T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : (i == 2 ? z : w)); }
};

// Scalar-first quaternion; (1,0,0,0) is the identity rotation.
template <class T>
struct Quat {
    T w{}, x{}, y{}, z{};

    T norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quat operator*(T s) const { return {w * s, x * s, y * s, z * s}; }
    Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    T operator[](int i) const { return i == 0 ? w : (i == 1 ? x : (i == 2 ? y : z)); }
    T& operator[](int i) { return i == 0 ? w : (i == 1 ? x : (i == 2 ? y : z)); }
};

template <class T>
struct Mat2 {
    T m[2][2]{};

    static Mat2 identity() {
        Mat2 r;
        r.m[0][0] = r.m[1][1] = T(1);
        return r;
    }
    Vec2<T> operator*(const Vec2<T>& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
};

template <class T>
struct Mat3 {
    T m[3][3]{};

    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = T(1);
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }
    Vec3<T> operator*(const Vec3<T>& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                T s = T(0);
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Vec3<T> transposed_mul(const Vec3<T>& v) const {
        return {m[0][0] * v.x + m[1][0] * v.y + m[2][0] * v.z,
                m[0][1] * v.x + m[1][1] * v.y + m[2][1] * v.z,
                m[0][2] * v.x + m[1][2] * v.y + m[2][2] * v.z};
    }
};

template <class T>
struct Mat4 {
    T m[4][4]{};

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = T(1);
        return r;
    }
    Mat4 transposed() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }
    Vec4<T> operator*(const Vec4<T>& v) const {
        Vec4<T> r;
        for (int i = 0; i < 4; ++i)
            r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z + m[i][3] * v.w;
        return r;
    }
    Mat4 operator*(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                T s = T(0);
                for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Mat3<T> upper3x3() const {
        Mat3<T> r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][j];
        return r;
    }
};

// Symmetric 2x2, upper triangle (xx, xy, yy). Symmetry holds by storage.
template <class T>
struct SymMat2 {
    T xx{}, xy{}, yy{};

    T det() const { return xx * yy - xy * xy; }
    T trace() const { return xx + yy; }
    Mat2<T> full() const {
        Mat2<T> r;
        r.m[0][0] = xx;
        r.m[0][1] = xy;
        r.m[1][0] = xy;
        r.m[1][1] = yy;
        return r;
    }
    SymMat2 operator+(const SymMat2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    SymMat2& operator+=(const SymMat2& o) {
        xx += o.xx;
        xy += o.xy;
        yy += o.yy;
        return *this;
    }
    T max_eigenvalue() const {
        T mid = (xx + yy) / T(2);
        T disc = mid * mid - det();
        return mid + std::sqrt(disc > T(0) ? disc : T(0));
    }
    T quad(const Vec2<T>& d) const { return xx * d.x * d.x + T(2) * xy * d.x * d.y + yy * d.y * d.y; }
};

// Symmetric 3x3, upper triangle (xx, xy, xz, yy, yz, zz).
template <class T>
struct SymMat3 {
    T xx{}, xy{}, xz{}, yy{}, yz{}, zz{};

    Mat3<T> full() const {
        Mat3<T> r;
        r.m[0][0] = xx;
        r.m[0][1] = xy;
        r.m[0][2] = xz;
        r.m[1][0] = xy;
        r.m[1][1] = yy;
        r.m[1][2] = yz;
        r.m[2][0] = xz;
        r.m[2][1] = yz;
        r.m[2][2] = zz;
        return r;
    }
    static SymMat3 from_full(const Mat3<T>& a) {
        return {a.m[0][0], a.m[0][1], a.m[0][2], a.m[1][1], a.m[1][2], a.m[2][2]};
    }
    SymMat3 operator+(const SymMat3& o) const {
        return {xx + o.xx, xy + o.xy, xz + o.xz, yy + o.yy, yz + o.yz, zz + o.zz};
    }
    SymMat3 operator-(const SymMat3& o) const {
        return {xx - o.xx, xy - o.xy, xz - o.xz, yy - o.yy, yz - o.yz, zz - o.zz};
    }
};

template <class T>
inline T clamp(T v, T lo, T hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace tilesplat
