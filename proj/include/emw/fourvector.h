#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace emw {

using complexd = std::complex<double>;

// Space-time point (x, x0), metric (+,-,-,-), c = 1.
struct FourVector {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x0 = 0.0;

    FourVector() = default;
    FourVector(double a1, double a2, double a3, double a0)
        : x1(a1), x2(a2), x3(a3), x0(a0) {}

    double spatial_norm_sq() const { return x1 * x1 + x2 * x2 + x3 * x3; }
    double spatial_norm() const { return std::sqrt(spatial_norm_sq()); }

    FourVector operator+(const FourVector& o) const {
        return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x0 + o.x0};
    }
    FourVector operator-(const FourVector& o) const {
        return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x0 - o.x0};
    }
    FourVector operator-() const { return {-x1, -x2, -x3, -x0}; }
    FourVector operator*(double a) const { return {a * x1, a * x2, a * x3, a * x0}; }
};

inline FourVector operator*(double a, const FourVector& v) { return v * a; }

inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.x0 * b.x0 - (a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3);
}

inline double lorentz_square(const FourVector& x) { return minkowski_dot(x, x); }

// Complex space-time point; components are independent complex numbers.
struct CFourVector {
    complexd x1{0.0, 0.0}, x2{0.0, 0.0}, x3{0.0, 0.0}, x0{0.0, 0.0};

    CFourVector() = default;
    CFourVector(complexd a1, complexd a2, complexd a3, complexd a0)
        : x1(a1), x2(a2), x3(a3), x0(a0) {}
    CFourVector(const FourVector& re, const FourVector& im)
        : x1(re.x1, im.x1), x2(re.x2, im.x2), x3(re.x3, im.x3), x0(re.x0, im.x0) {}

    FourVector real() const { return {x1.real(), x2.real(), x3.real(), x0.real()}; }
    FourVector imag() const { return {x1.imag(), x2.imag(), x3.imag(), x0.imag()}; }

    CFourVector operator-(const CFourVector& o) const {
        return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x0 - o.x0};
    }
    CFourVector conj() const {
        return {std::conj(x1), std::conj(x2), std::conj(x3), std::conj(x0)};
    }
};

// Minkowski square of a complex four-vector (complex-bilinear, no conjugation).
inline complexd lorentz_square(const CFourVector& w) {
    return w.x0 * w.x0 - (w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3);
}

// Timelike vector: y0^2 > |y|^2 strictly. lambda = sqrt(y.y) > 0.
// Points with y.y = 0 are rejected, never treated as limits.
struct CausalVector {
    FourVector y;
    double lambda;

    explicit CausalVector(const FourVector& v) : y(v) {
        const double q = lorentz_square(v);
        if (!(q > 0.0))
            throw std::invalid_argument("CausalVector: y is not timelike (y.y <= 0)");
        lambda = std::sqrt(q);
    }

    int helicity_sign() const { return y.x0 > 0.0 ? +1 : -1; }
};

// z = x + iy with y timelike; always inside the tube, branch = sign(y0).
struct TubePoint {
    FourVector x;
    CausalVector y;

    TubePoint(const FourVector& re, const CausalVector& im) : x(re), y(im) {}
    TubePoint(const FourVector& re, const FourVector& im) : x(re), y(CausalVector(im)) {}

    int branch() const { return y.helicity_sign(); }

    CFourVector value() const { return CFourVector(x, y.y); }
    // Complex conjugate point x - iy.
    CFourVector conj_value() const { return CFourVector(x, -1.0 * y.y); }
};

enum class TubeMembership { PlusTube, MinusTube, Outside };

inline TubeMembership in_tube(const FourVector& re, const FourVector& im) {
    (void)re;
    const double r = im.spatial_norm();
    if (im.x0 > r) return TubeMembership::PlusTube;
    if (-im.x0 > r) return TubeMembership::MinusTube;
    return TubeMembership::Outside;
}

inline TubeMembership in_tube(const CFourVector& z) {
    return in_tube(z.real(), z.imag());
}

}  // namespace emw
