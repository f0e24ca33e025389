#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>

#include "hyperphase/cplx.hpp"
#include "hyperphase/models.hpp"

namespace hyperphase {

// A point on the color wheel, or black where a coloring leaves a point
// uncolored.
class HueValue {
public:
    // Normalizes the angle to [0, 2pi).
    static HueValue hue(double angle);
    static HueValue black() { return HueValue(); }

    bool is_black() const { return black_; }
    // Only meaningful when !is_black().
    double angle() const { return angle_; }

    friend bool operator==(const HueValue&, const HueValue&) = default;

private:
    HueValue() = default;
    double angle_ = 0.0;
    bool black_ = true;
};

enum class Coloring {
    ComplexPhase,
    Pseudo,
    DiscAsymptotic,
    DiscUltraparallel,
    BeltramiV1,
    BeltramiV2,
    KleinV1,
    KleinV2,
};

std::string_view to_string(Coloring c);

// Which family of parallel h-lines receives unique colors: the vertical
// lines of the half-plane (asymptotic) or the semicircles centered at 0
// (ultra-parallel).
enum class DiscFamily { Asymptotic = 1, Ultraparallel = 2 };

using ComplexFunction = std::function<Complex(const Complex&)>;

struct ColorSpec {
    Coloring coloring = Coloring::DiscAsymptotic;
    Mobius motion = Mobius::identity();
    bool conjugation_omitted = false;
    // Replaces `motion` for ComplexPhase when set (e.g. anticonformal maps).
    ComplexFunction function;
};

// How a sample point is to be read before a coloring is applied.
enum class Chart { Plane, HalfPlane, Disc, Klein };

// Phase of f(z); black where f(z) is 0 or infinity.
HueValue color_complex(const ComplexFunction& f, const Complex& z);
HueValue color_complex(const Mobius& f, const Complex& z);

// Re f(T_P(p)) when it lies in [0, 2pi] (2pi wraps to 0), black otherwise.
HueValue color_pseudosphere(const Mobius& f, const PseudoCoord& p);

// arg T_D(Re f(T_D^-1(w))): constant along preimages of vertical lines.
HueValue color_disc_asymptotic(const Mobius& f, const Complex& w,
                               bool conjugation_omitted = false);

// 2 arg(i T_D(|f(T_D^-1(w))|)): constant along preimages of the semicircles
// |z| = r.
HueValue color_disc_ultraparallel(const Mobius& f, const Complex& w,
                                  bool conjugation_omitted = false);

HueValue color_disc(const Mobius& f, const Complex& w, DiscFamily family,
                    bool conjugation_omitted = false);

HueValue color_beltrami(const Mobius& f, const SpherePoint& p, DiscFamily family,
                        bool conjugation_omitted = false);

HueValue color_klein(const Mobius& f, const Complex& k, DiscFamily family,
                     bool conjugation_omitted = false);

// Hue angle of the disc coloring rescaled to [0, 1).
double height_disc(const Mobius& f, const Complex& w, DiscFamily family,
                   bool conjugation_omitted = false);

// log(1 + |f(z)|) clamped to `ceiling`; poles give the ceiling.
double modulus_height(const ComplexFunction& f, const Complex& z, double ceiling = 6.0);
double modulus_height(const Mobius& f, const Complex& z, double ceiling = 6.0);

// Evaluates `spec` at `point` interpreted in `chart`; the point is carried
// into the coloring's native model first. Points outside the closed model
// region of a hyperbolic coloring are black.
HueValue evaluate(const ColorSpec& spec, const Complex& point, Chart chart);

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Fully saturated hue wheel, angle 0 = red; black -> (0, 0, 0).
Rgb hue_to_rgb(const HueValue& h);
// Unrounded channels in [0, 255], for averaging.
std::array<double, 3> hue_to_rgb_exact(const HueValue& h);

}  // namespace hyperphase
