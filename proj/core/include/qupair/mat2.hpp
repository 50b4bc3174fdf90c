// mat2.hpp — Tiny value-semantics 2x2 complex matrix used for branch states
// and propagators.  Deliberately minimal: the library never needs more than
// products, adjoints and traces in dimension two.

#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace qupair {

using Complex = std::complex<double>;

struct Mat2 {
    Complex a00{0.0}, a01{0.0}, a10{0.0}, a11{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    Complex operator()(int r, int c) const {
        return r == 0 ? (c == 0 ? a00 : a01) : (c == 0 ? a10 : a11);
    }
    Complex& operator()(int r, int c) {
        return r == 0 ? (c == 0 ? a00 : a01) : (c == 0 ? a10 : a11);
    }

    Complex trace() const { return a00 + a11; }

    Mat2 adjoint() const {
        return {std::conj(a00), std::conj(a10), std::conj(a01), std::conj(a11)};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a00 * y.a00 + x.a01 * y.a10, x.a00 * y.a01 + x.a01 * y.a11,
                x.a10 * y.a00 + x.a11 * y.a10, x.a10 * y.a01 + x.a11 * y.a11};
    }
    friend Mat2 operator*(Complex s, const Mat2& m) {
        return {s * m.a00, s * m.a01, s * m.a10, s * m.a11};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a00 + y.a00, x.a01 + y.a01, x.a10 + y.a10, x.a11 + y.a11};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a00 - y.a00, x.a01 - y.a01, x.a10 - y.a10, x.a11 - y.a11};
    }
};

// Largest absolute entry of x - y; handy for tolerance checks.
inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    return std::max(std::max(std::abs(x.a00 - y.a00), std::abs(x.a01 - y.a01)),
                    std::max(std::abs(x.a10 - y.a10), std::abs(x.a11 - y.a11)));
}

// Eigenvalues of a Hermitian 2x2 matrix, ascending.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
    const double tr = std::real(m.a00 + m.a11);
    const double dd = std::real(m.a00 - m.a11);
    const double disc = std::sqrt(dd * dd / 4.0 + std::norm(m.a01));
    return {tr / 2.0 - disc, tr / 2.0 + disc};
}

} // namespace qupair
