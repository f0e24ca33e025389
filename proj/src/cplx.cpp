#include "hyperphase/cplx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "hyperphase/error.hpp"

namespace hyperphase {

std::ostream& operator<<(std::ostream& os, const Complex& z) {
    if (z.is_infinite()) return os << "inf";
    os << z.re();
    if (z.im() >= 0.0 || std::isnan(z.im())) os << '+';
    return os << z.im() << 'i';
}

double arg2pi(std::complex<double> z) {
    if (z == 0.0) throw DomainError("argument of zero is undefined");
    double a = std::atan2(z.imag(), z.real());
    if (a < 0.0) a += kTwoPi;
    // atan2 of a tiny negative imaginary part can round up to exactly 2pi.
    return a >= kTwoPi ? 0.0 : a;
}

double arg2pi(const Complex& z) {
    if (z.is_infinite()) throw DomainError("argument of infinity is undefined");
    return arg2pi(z.value());
}

double distance(const Complex& a, const Complex& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() == b.is_infinite() ? 0.0 : HUGE_VAL;
    }
    return std::abs(a.value() - b.value());
}

GenCircle GenCircle::circle(std::complex<double> center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("circle radius must be finite and positive");
    }
    return GenCircle(Circle{center, radius});
}

GenCircle GenCircle::line(std::complex<double> base, double angle) {
    if (!std::isfinite(angle)) throw DomainError("line angle must be finite");
    angle = std::fmod(angle, kPi);
    if (angle < 0.0) angle += kPi;
    if (angle >= kPi) angle = 0.0;
    return GenCircle(Line{base, angle});
}

Complex GenCircle::sample(double t) const {
    if (const auto* c = std::get_if<Circle>(&shape_)) {
        return c->center + std::polar(c->radius, kTwoPi * t);
    }
    const auto& l = std::get<Line>(shape_);
    return l.base + std::tan(kPi * (t - 0.5)) * std::polar(1.0, l.angle);
}

std::ostream& operator<<(std::ostream& os, const GenCircle& g) {
    if (g.is_circle()) {
        const auto& c = g.as_circle();
        return os << "circle(" << Complex(c.center) << ", " << c.radius << ")";
    }
    const auto& l = g.as_line();
    return os << "line(" << Complex(l.base) << ", " << l.angle << ")";
}

Complex invert_in_circle(const Circle& circle, const Complex& z) {
    if (z.is_infinite()) return Complex(circle.center);
    const std::complex<double> offset = z.value() - circle.center;
    if (offset == 0.0) return Complex::infinity();
    return Complex(circle.center + circle.radius * circle.radius / std::conj(offset));
}

Complex reflect_in_line(const Line& line, const Complex& z) {
    if (z.is_infinite()) return z;
    const std::complex<double> rot = std::polar(1.0, 2.0 * line.angle);
    return Complex(line.base + rot * std::conj(z.value() - line.base));
}

Complex reflect(const GenCircle& curve, const Complex& z) {
    return curve.is_circle() ? invert_in_circle(curve.as_circle(), z)
                             : reflect_in_line(curve.as_line(), z);
}

namespace {

double max_norm(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                std::complex<double> d) {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

}  // namespace

Mobius::Mobius(std::complex<double> a, std::complex<double> b, std::complex<double> c,
               std::complex<double> d)
    : a_(a), b_(b), c_(c), d_(d) {
    const double scale = max_norm(a, b, c, d);
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DegenerateError("Mobius coefficients must be finite and not all zero");
    }
    const std::complex<double> det_scaled = (a / scale) * (d / scale) - (b / scale) * (c / scale);
    if (std::abs(det_scaled) <= 1e-14) {
        throw DegenerateError("Mobius determinant is zero");
    }
}

Mobius Mobius::normalized() const {
    const std::complex<double> s = std::sqrt(det());
    return Mobius(a_ / s, b_ / s, c_ / s, d_ / s);
}

Complex Mobius::operator()(const Complex& z) const {
    if (z.is_infinite()) {
        if (c_ == 0.0) return Complex::infinity();
        return Complex(a_ / c_);
    }
    const std::complex<double> den = c_ * z.value() + d_;
    if (den == 0.0) return Complex::infinity();
    return Complex((a_ * z.value() + b_) / den);
}

std::ostream& operator<<(std::ostream& os, const Mobius& m) {
    return os << "(" << Complex(m.a()) << ", " << Complex(m.b()) << ", " << Complex(m.c())
              << ", " << Complex(m.d()) << ")";
}

Mobius compose(const Mobius& outer, const Mobius& inner) {
    return Mobius(outer.a() * inner.a() + outer.b() * inner.c(),
                  outer.a() * inner.b() + outer.b() * inner.d(),
                  outer.c() * inner.a() + outer.d() * inner.c(),
                  outer.c() * inner.b() + outer.d() * inner.d());
}

bool approx_equal(const Mobius& m1, const Mobius& m2, double tol) {
    const std::array<std::complex<double>, 4> x{m1.a(), m1.b(), m1.c(), m1.d()};
    const std::array<std::complex<double>, 4> y{m2.a(), m2.b(), m2.c(), m2.d()};
    // Best scalar fit x ~ lambda * y, then relative residual.
    std::complex<double> num = 0.0;
    double den = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        num += std::conj(y[i]) * x[i];
        den += std::norm(y[i]);
        xx += std::norm(x[i]);
    }
    const std::complex<double> lambda = num / den;
    double res = 0.0;
    for (std::size_t i = 0; i < 4; ++i) res += std::norm(x[i] - lambda * y[i]);
    return std::sqrt(res) <= tol * std::sqrt(xx);
}

Mobius antiholomorphic_part(const GenCircle& curve) {
    if (curve.is_circle()) {
        // c + r^2 / (w - conj c) with w = conj z
        const auto& [c, r] = curve.as_circle();
        return Mobius(c, r * r - std::norm(c), 1.0, -std::conj(c));
    }
    // base + e^{2ia} (w - conj base)
    const auto& [base, angle] = curve.as_line();
    const std::complex<double> rot = std::polar(1.0, 2.0 * angle);
    return Mobius(rot, base - rot * std::conj(base), 0.0, 1.0);
}

}  // namespace hyperphase
