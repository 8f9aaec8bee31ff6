#pragma once

#include <cmath>
#include <complex>

namespace dirac1d {

using cplx = std::complex<double>;

/// Two-component Dirac spinor (upper, lower).
struct Spinor2 {
  cplx c1{};
  cplx c2{};

  Spinor2& operator+=(const Spinor2& o) noexcept { c1 += o.c1; c2 += o.c2; return *this; }
  Spinor2& operator-=(const Spinor2& o) noexcept { c1 -= o.c1; c2 -= o.c2; return *this; }
  Spinor2& operator*=(cplx s) noexcept { c1 *= s; c2 *= s; return *this; }

  friend Spinor2 operator+(Spinor2 a, const Spinor2& b) noexcept { return a += b; }
  friend Spinor2 operator-(Spinor2 a, const Spinor2& b) noexcept { return a -= b; }
  friend Spinor2 operator*(cplx s, Spinor2 a) noexcept { return a *= s; }
  friend Spinor2 operator*(Spinor2 a, cplx s) noexcept { return a *= s; }
  friend bool operator==(const Spinor2&, const Spinor2&) = default;
};

inline double norm2(const Spinor2& s) noexcept { return std::norm(s.c1) + std::norm(s.c2); }

/// <a, b> with the first argument conjugated.
inline cplx dot(const Spinor2& a, const Spinor2& b) noexcept {
  return std::conj(a.c1) * b.c1 + std::conj(a.c2) * b.c2;
}

/// 2x2 complex matrix, row major.
struct Mat2 {
  cplx a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() noexcept { return {}; }
  static Mat2 sigma1() noexcept { return {0.0, 1.0, 1.0, 0.0}; }
  static Mat2 sigma2() noexcept { return {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}; }
  static Mat2 sigma3() noexcept { return {1.0, 0.0, 0.0, -1.0}; }

  Mat2& operator+=(const Mat2& o) noexcept {
    a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) noexcept {
    a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
    return *this;
  }
  Mat2& operator*=(cplx s) noexcept {
    a11 *= s; a12 *= s; a21 *= s; a22 *= s;
    return *this;
  }

  friend Mat2 operator+(Mat2 a, const Mat2& b) noexcept { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) noexcept { return a -= b; }
  friend Mat2 operator*(cplx s, Mat2 a) noexcept { return a *= s; }
  friend Mat2 operator*(Mat2 a, cplx s) noexcept { return a *= s; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) noexcept {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Spinor2 operator*(const Mat2& m, const Spinor2& s) noexcept {
    return {m.a11 * s.c1 + m.a12 * s.c2, m.a21 * s.c1 + m.a22 * s.c2};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  Mat2 adjoint() const noexcept {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }
  cplx trace() const noexcept { return a11 + a22; }
  cplx det() const noexcept { return a11 * a22 - a12 * a21; }
};

/// Largest entrywise modulus.
inline double max_abs(const Mat2& m) noexcept {
  return std::fmax(std::fmax(std::abs(m.a11), std::abs(m.a12)),
                   std::fmax(std::abs(m.a21), std::abs(m.a22)));
}

}  // namespace dirac1d
