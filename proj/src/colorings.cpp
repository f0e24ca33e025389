#include "hyperphase/colorings.hpp"

#include <cmath>

namespace hyperphase {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kOutsideSlack = 1e-9;

Complex to_halfplane(const Complex& p, Chart chart) {
    switch (chart) {
        case Chart::Plane:
        case Chart::HalfPlane: return p;
        case Chart::Disc: return disc_to_halfplane(p);
        case Chart::Klein: return disc_to_halfplane(klein_to_disc(p));
    }
    return p;
}

Complex to_disc(const Complex& p, Chart chart) {
    switch (chart) {
        case Chart::Plane:
        case Chart::HalfPlane: return halfplane_to_disc(p);
        case Chart::Disc: return p;
        case Chart::Klein: return klein_to_disc(p);
    }
    return p;
}

bool in_closed_disc(const Complex& w) {
    return w.is_finite() && std::abs(w.value()) <= 1.0 + kOutsideSlack;
}

}  // namespace

HueValue HueValue::hue(double angle) {
    HueValue h;
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    h.angle_ = a;
    h.black_ = false;
    return h;
}

std::string_view to_string(Coloring c) {
    switch (c) {
        case Coloring::ComplexPhase: return "complex";
        case Coloring::Pseudo: return "pseudo";
        case Coloring::DiscAsymptotic: return "disc1";
        case Coloring::DiscUltraparallel: return "disc2";
        case Coloring::BeltramiV1: return "beltrami1";
        case Coloring::BeltramiV2: return "beltrami2";
        case Coloring::KleinV1: return "klein1";
        case Coloring::KleinV2: return "klein2";
    }
    return "?";
}

HueValue color_complex(const ComplexFunction& f, const Complex& z) {
    const Complex fz = f(z);
    if (fz.is_infinite() || fz.value() == 0.0) return HueValue::black();
    return HueValue::hue(arg2pi(fz));
}

HueValue color_complex(const Mobius& f, const Complex& z) {
    const Complex fz = f(z);
    if (fz.is_infinite() || fz.value() == 0.0) return HueValue::black();
    return HueValue::hue(arg2pi(fz));
}

HueValue color_pseudosphere(const Mobius& f, const PseudoCoord& p) {
    const Complex fz = f(pseudo_to_halfplane(p));
    if (fz.is_infinite()) return HueValue::black();
    const double x = fz.re();
    if (x >= 0.0 && x <= kTwoPi) return HueValue::hue(x);
    return HueValue::black();
}

HueValue color_disc_asymptotic(const Mobius& f, const Complex& w, bool conjugation_omitted) {
    const bool conj = !conjugation_omitted;
    const Complex fz = f(disc_to_halfplane(w, conj));
    const Complex boundary = fz.is_infinite() ? fz : Complex(fz.re(), 0.0);
    return HueValue::hue(arg2pi(halfplane_to_disc(boundary, conj)));
}

HueValue color_disc_ultraparallel(const Mobius& f, const Complex& w, bool conjugation_omitted) {
    const bool conj = !conjugation_omitted;
    const Complex fz = f(disc_to_halfplane(w, conj));
    const Complex boundary = fz.is_infinite() ? fz : Complex(std::abs(fz.value()), 0.0);
    const Complex edge = halfplane_to_disc(boundary, conj);
    return HueValue::hue(2.0 * arg2pi(kI * edge.value()));
}

HueValue color_disc(const Mobius& f, const Complex& w, DiscFamily family,
                    bool conjugation_omitted) {
    return family == DiscFamily::Asymptotic
               ? color_disc_asymptotic(f, w, conjugation_omitted)
               : color_disc_ultraparallel(f, w, conjugation_omitted);
}

HueValue color_beltrami(const Mobius& f, const SpherePoint& p, DiscFamily family,
                        bool conjugation_omitted) {
    return color_disc(f, hemisphere_to_disc(p), family, conjugation_omitted);
}

HueValue color_klein(const Mobius& f, const Complex& k, DiscFamily family,
                     bool conjugation_omitted) {
    return color_beltrami(f, klein_to_hemisphere(k), family, conjugation_omitted);
}

double height_disc(const Mobius& f, const Complex& w, DiscFamily family,
                   bool conjugation_omitted) {
    return color_disc(f, w, family, conjugation_omitted).angle() / kTwoPi;
}

double modulus_height(const ComplexFunction& f, const Complex& z, double ceiling) {
    const Complex fz = f(z);
    if (fz.is_infinite()) return ceiling;
    return std::min(std::log1p(std::abs(fz.value())), ceiling);
}

double modulus_height(const Mobius& f, const Complex& z, double ceiling) {
    return modulus_height(ComplexFunction([&f](const Complex& x) { return f(x); }), z, ceiling);
}

HueValue evaluate(const ColorSpec& spec, const Complex& point, Chart chart) {
    const bool omit = spec.conjugation_omitted;
    switch (spec.coloring) {
        case Coloring::ComplexPhase:
            return spec.function ? color_complex(spec.function, point)
                                 : color_complex(spec.motion, point);
        case Coloring::Pseudo: {
            const Complex z = to_halfplane(point, chart);
            if (z.is_infinite() || !(z.im() > 0.0)) return HueValue::black();
            return color_pseudosphere(spec.motion, halfplane_to_pseudo(z));
        }
        case Coloring::DiscAsymptotic:
        case Coloring::DiscUltraparallel: {
            const Complex w = to_disc(point, chart);
            if (!in_closed_disc(w)) return HueValue::black();
            const auto family = spec.coloring == Coloring::DiscAsymptotic
                                    ? DiscFamily::Asymptotic
                                    : DiscFamily::Ultraparallel;
            return color_disc(spec.motion, w, family, omit);
        }
        case Coloring::BeltramiV1:
        case Coloring::BeltramiV2: {
            const auto family = spec.coloring == Coloring::BeltramiV1 ? DiscFamily::Asymptotic
                                                                      : DiscFamily::Ultraparallel;
            if (chart == Chart::Klein) {
                if (!in_closed_disc(point)) return HueValue::black();
                return color_beltrami(spec.motion, klein_to_hemisphere(point), family, omit);
            }
            const Complex w = to_disc(point, chart);
            if (!in_closed_disc(w)) return HueValue::black();
            return color_beltrami(spec.motion, disc_to_hemisphere(w), family, omit);
        }
        case Coloring::KleinV1:
        case Coloring::KleinV2: {
            const auto family = spec.coloring == Coloring::KleinV1 ? DiscFamily::Asymptotic
                                                                   : DiscFamily::Ultraparallel;
            if (chart == Chart::Klein) {
                if (!in_closed_disc(point)) return HueValue::black();
                return color_klein(spec.motion, point, family, omit);
            }
            const Complex w = to_disc(point, chart);
            if (!in_closed_disc(w)) return HueValue::black();
            return color_klein(spec.motion, disc_to_klein(w), family, omit);
        }
    }
    return HueValue::black();
}

std::array<double, 3> hue_to_rgb_exact(const HueValue& h) {
    if (h.is_black()) return {0.0, 0.0, 0.0};
    const double sector = h.angle() / kTwoPi * 6.0;
    const int i = static_cast<int>(std::floor(sector)) % 6;
    const double f = sector - std::floor(sector);
    const double up = 255.0 * f;
    const double down = 255.0 * (1.0 - f);
    switch (i) {
        case 0: return {255.0, up, 0.0};
        case 1: return {down, 255.0, 0.0};
        case 2: return {0.0, 255.0, up};
        case 3: return {0.0, down, 255.0};
        case 4: return {up, 0.0, 255.0};
        default: return {255.0, 0.0, down};
    }
}

Rgb hue_to_rgb(const HueValue& h) {
    const auto c = hue_to_rgb_exact(h);
    return {static_cast<std::uint8_t>(std::lround(c[0])),
            static_cast<std::uint8_t>(std::lround(c[1])),
            static_cast<std::uint8_t>(std::lround(c[2]))};
}

}  // namespace hyperphase
