#pragma once

#include <complex>
#include <iosfwd>
#include <numbers>
#include <variant>

namespace hyperphase {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A point of the extended complex plane: finite values plus a single unsigned
// point at infinity (the north pole of the Riemann sphere).
class Complex {
public:
    constexpr Complex() = default;
    constexpr Complex(double re, double im = 0.0) : z_(re, im) {}
    constexpr Complex(std::complex<double> z) : z_(z) {}

    static constexpr Complex infinity() {
        Complex c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    // Only meaningful for finite points.
    constexpr double re() const { return z_.real(); }
    constexpr double im() const { return z_.imag(); }
    constexpr std::complex<double> value() const { return z_; }

    Complex conj() const { return infinite_ ? *this : Complex(std::conj(z_)); }

    friend bool operator==(const Complex& a, const Complex& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.z_ == b.z_;
    }

private:
    std::complex<double> z_{};
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

// Argument in [0, 2pi). Throws DomainError for 0 and infinity.
double arg2pi(const Complex& z);
double arg2pi(std::complex<double> z);

// Distance on finite points; infinity is only close to infinity.
double distance(const Complex& a, const Complex& b);

// Euclidean circle with positive radius.
struct Circle {
    std::complex<double> center;
    double radius;
};

// Straight line through `base` at direction angle in [0, pi).
struct Line {
    std::complex<double> base;
    double angle;
};

// Generalized circle: a Euclidean circle or a straight line.
class GenCircle {
public:
    static GenCircle circle(std::complex<double> center, double radius);
    static GenCircle line(std::complex<double> base, double angle);
    static GenCircle vertical(double x) { return line({x, 0.0}, kPi / 2.0); }

    bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
    bool is_line() const { return std::holds_alternative<Line>(shape_); }
    const Circle& as_circle() const { return std::get<Circle>(shape_); }
    const Line& as_line() const { return std::get<Line>(shape_); }

    // Point on the curve for parameter t in [0, 1). Lines are parametrized
    // through tan so that t -> 1 approaches infinity.
    Complex sample(double t) const;

private:
    explicit GenCircle(std::variant<Circle, Line> shape) : shape_(shape) {}
    std::variant<Circle, Line> shape_;
};

std::ostream& operator<<(std::ostream& os, const GenCircle& g);

// z -> c + r^2 / conj(z - c); the center swaps with infinity.
Complex invert_in_circle(const Circle& circle, const Complex& z);
Complex reflect_in_line(const Line& line, const Complex& z);
Complex reflect(const GenCircle& curve, const Complex& z);

// z -> (a z + b) / (c z + d), nondegenerate.
class Mobius {
public:
    // Throws DegenerateError when |ad - bc| <= 1e-14 after max-norm scaling.
    Mobius(std::complex<double> a, std::complex<double> b, std::complex<double> c,
           std::complex<double> d);

    static Mobius identity() { return Mobius(1.0, 0.0, 0.0, 1.0); }

    std::complex<double> a() const { return a_; }
    std::complex<double> b() const { return b_; }
    std::complex<double> c() const { return c_; }
    std::complex<double> d() const { return d_; }

    std::complex<double> det() const { return a_ * d_ - b_ * c_; }
    std::complex<double> trace() const { return a_ + d_; }

    // Same map with determinant 1 (sign of the square root is arbitrary).
    Mobius normalized() const;
    Mobius inverse() const { return Mobius(d_, -b_, -c_, a_); }

    // Infinity -> a/c; -d/c -> infinity exactly when c z + d == 0.
    Complex operator()(const Complex& z) const;

private:
    std::complex<double> a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Mobius& m);

// Applies `inner` first.
Mobius compose(const Mobius& outer, const Mobius& inner);

// Projective equality of the coefficient matrices up to a scalar.
bool approx_equal(const Mobius& m1, const Mobius& m2, double tol);

// Matrix A with reflect(curve, z) == A(conj(z)).
Mobius antiholomorphic_part(const GenCircle& curve);

}  // namespace hyperphase
