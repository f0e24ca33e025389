#include "hyperphase/models.hpp"

#include <cmath>

#include "hyperphase/error.hpp"

namespace hyperphase {

namespace {

constexpr double kDiscSlack = 1e-9;

}  // namespace

SpherePoint stereo_to_sphere(const Complex& z) {
    if (z.is_infinite()) return {0.0, 0.0, 1.0};
    const double r2 = std::norm(z.value());
    const std::complex<double> xy = 2.0 * z.value() / (1.0 + r2);
    return {xy.real(), xy.imag(), (r2 - 1.0) / (r2 + 1.0)};
}

Complex sphere_to_plane(const SpherePoint& p) {
    const std::complex<double> xy(p.x, p.y);
    if (p.z > 0.0) {
        // Equivalent form (1 + Z) / conj(X + iY), stable near the north pole.
        if (xy == 0.0) return Complex::infinity();
        return Complex((1.0 + p.z) / std::conj(xy));
    }
    return Complex(xy / (1.0 - p.z));
}

Complex pseudo_to_halfplane(const PseudoCoord& p) {
    return Complex(p.theta, std::exp(p.sigma));
}

PseudoCoord halfplane_to_pseudo(const Complex& z) {
    if (z.is_infinite() || !(z.im() > 0.0)) {
        throw DomainError("pseudosphere coordinates need Im z > 0");
    }
    return {z.re(), std::log(z.im())};
}

// Inversion in K with its squared radius kept exact: sqrt(2)^2 rounds to
// 2 + 4e-16, which moves T_D^-1(0) off the point i.
Complex invert_in_k(const Complex& z) {
    const std::complex<double> center = kDiscInversionCircle.center;
    if (z.is_infinite()) return Complex(center);
    const std::complex<double> offset = z.value() - center;
    if (offset == 0.0) return Complex::infinity();
    return Complex(center + 2.0 / std::conj(offset));
}

Complex halfplane_to_disc(const Complex& z, bool conjugate) {
    const Complex inv = invert_in_k(z);
    return conjugate ? inv.conj() : inv;
}

Complex disc_to_halfplane(const Complex& w, bool conjugate) {
    return invert_in_k(conjugate ? w.conj() : w);
}

Mobius halfplane_to_disc_mobius() {
    using C = std::complex<double>;
    return Mobius(C(0.0, 1.0), 1.0, 1.0, C(0.0, 1.0));
}

SpherePoint disc_to_hemisphere(const Complex& w) {
    if (w.is_infinite() || std::abs(w.value()) > 1.0 + kDiscSlack) {
        throw DomainError("Beltrami lift needs |w| <= 1");
    }
    const double r2 = std::norm(w.value());
    const std::complex<double> xy = 2.0 * w.value() / (1.0 + r2);
    return {xy.real(), xy.imag(), (1.0 - r2) / (1.0 + r2)};
}

Complex hemisphere_to_disc(const SpherePoint& p) {
    if (p.z < -kDiscSlack) throw DomainError("point lies below the equator");
    return Complex(std::complex<double>(p.x, p.y) / (1.0 + p.z));
}

Complex hemisphere_to_klein(const SpherePoint& p) { return Complex(p.x, p.y); }

SpherePoint klein_to_hemisphere(const Complex& k) {
    if (k.is_infinite()) throw DomainError("Klein lift needs |k| <= 1");
    const double r2 = std::norm(k.value());
    if (r2 > (1.0 + kDiscSlack) * (1.0 + kDiscSlack)) {
        throw DomainError("Klein lift needs |k| <= 1");
    }
    return {k.re(), k.im(), std::sqrt(std::max(0.0, 1.0 - r2))};
}

Complex disc_to_klein(const Complex& w) { return hemisphere_to_klein(disc_to_hemisphere(w)); }

Complex klein_to_disc(const Complex& k) { return hemisphere_to_disc(klein_to_hemisphere(k)); }

Point3 embed_pseudosphere(const PseudoCoord& p) { return embed_dini(p, 0.0); }

Point3 embed_dini(const PseudoCoord& p, double twist) {
    if (!(p.sigma >= 0.0)) throw DomainError("surface embedding needs sigma >= 0");
    // Tractrix x = sech t, h = t - tanh t with arclength sigma = ln cosh t.
    const double radius = std::exp(-p.sigma);
    const double tanh_t = std::sqrt(-std::expm1(-2.0 * p.sigma));
    const double t = p.sigma + std::log1p(tanh_t);
    return {radius * std::cos(p.theta), radius * std::sin(p.theta),
            t - tanh_t + twist * p.theta};
}

double metric_scale(const Complex& z) {
    if (z.is_infinite() || !(z.im() > 0.0)) throw DomainError("metric needs Im z > 0");
    return 1.0 / z.im();
}

}  // namespace hyperphase
