#include "hyperphase/motions.hpp"

#include <algorithm>
#include <cmath>

#include "hyperphase/error.hpp"

namespace hyperphase {

namespace {

constexpr double kTraceTol = 1e-9;

Mobius conj_coefficients(const Mobius& m) {
    return Mobius(std::conj(m.a()), std::conj(m.b()), std::conj(m.c()), std::conj(m.d()));
}

double coefficient_scale(const Mobius& m) {
    return std::max({std::abs(m.a()), std::abs(m.b()), std::abs(m.c()), std::abs(m.d())});
}

bool is_identity(const Mobius& m) {
    const Mobius n = m.normalized();
    const double s = coefficient_scale(n);
    return std::abs(n.b()) <= kTraceTol * s && std::abs(n.c()) <= kTraceTol * s &&
           std::abs(n.a() - n.d()) <= kTraceTol * s;
}

}  // namespace

std::string_view to_string(MotionKind kind) {
    switch (kind) {
        case MotionKind::Rotation: return "rotation";
        case MotionKind::Translation: return "translation";
        case MotionKind::LimitRotation: return "limit-rotation";
        case MotionKind::Identity: return "identity";
    }
    return "?";
}

Mobius motion_from_reflections(const GenCircle& first, const GenCircle& second) {
    // R(z) = A(conj z), so R2(R1(z)) = A2(conj(A1(conj z))) = (A2 * conj(A1))(z).
    const Mobius inner = conj_coefficients(antiholomorphic_part(first));
    const Mobius outer = antiholomorphic_part(second);
    const Mobius m = compose(outer, inner);
    if (is_identity(m)) {
        throw MotionError("reflections in the same curve compose to the identity");
    }
    return m;
}

MotionKind classify(const Mobius& m) {
    const Mobius n = m.normalized();
    const double s = coefficient_scale(n);
    // Rotate the overall phase so the largest coefficient is real and positive.
    std::complex<double> pivot = n.a();
    for (auto v : {n.b(), n.c(), n.d()}) {
        if (std::abs(v) > std::abs(pivot)) pivot = v;
    }
    const std::complex<double> phase = std::conj(pivot) / std::abs(pivot);
    double worst_imag = 0.0;
    for (auto v : {n.a(), n.b(), n.c(), n.d()}) {
        worst_imag = std::max(worst_imag, std::abs((v * phase).imag()));
    }
    const double det_real = (n.det() * phase * phase).real();
    if (worst_imag > kTraceTol * s || det_real <= 0.0) {
        throw MotionError("map does not preserve the upper half-plane");
    }

    const std::complex<double> t = n.trace();
    const double tr2 = (t * t).real();
    if (std::abs(tr2 - 4.0) < kTraceTol) {
        return is_identity(n) ? MotionKind::Identity : MotionKind::LimitRotation;
    }
    return tr2 < 4.0 ? MotionKind::Rotation : MotionKind::Translation;
}

std::vector<Complex> fixed_points(const Mobius& m) {
    if (is_identity(m)) throw MotionError("every point is fixed by the identity");
    const Mobius n = m.normalized();
    const double s = coefficient_scale(n);
    const std::complex<double> a = n.a(), b = n.b(), c = n.c(), d = n.d();

    // c z^2 + (d - a) z - b = 0
    if (std::abs(c) <= 1e-14 * s) {
        if (std::abs(d - a) <= 1e-14 * s) return {Complex::infinity()};
        return {Complex(b / (d - a)), Complex::infinity()};
    }
    const std::complex<double> disc = (d - a) * (d - a) + 4.0 * b * c;
    if (std::abs(disc) <= 1e-12 * s * s) return {Complex((a - d) / (2.0 * c))};
    const std::complex<double> root = std::sqrt(disc);
    return {Complex((a - d + root) / (2.0 * c)), Complex((a - d - root) / (2.0 * c))};
}

namespace {

Preset make_preset(std::string name, std::string figure, GenCircle first, GenCircle second,
                   std::string printed, std::optional<Mobius> expected, FormulaStatus status,
                   std::string note = {}, std::optional<Mobius> corrected = {}) {
    const Mobius motion = motion_from_reflections(first, second);
    return Preset{std::move(name), std::move(figure), first,     second,
                  motion,          std::move(printed), expected, corrected,
                  status,          std::move(note)};
}

std::vector<Preset> build_presets() {
    constexpr double pi = kPi;
    const double sqrt3 = std::sqrt(3.0);
    using C = std::complex<double>;
    std::vector<Preset> out;

    out.push_back(make_preset(
        "fig8-rotation", "fig6,fig7,fig8", GenCircle::circle(0.0, 2 * pi),
        GenCircle::circle(2 * pi, 2 * pi), "4pi^2/(2pi - z)",
        Mobius(0.0, 4 * pi * pi, -1.0, 2 * pi), FormulaStatus::Matches));

    out.push_back(make_preset(
        "fig10-limit-rotation", "fig10", GenCircle::vertical(1.0), GenCircle::vertical(0.0),
        "z - 2", Mobius(1.0, -2.0, 0.0, 1.0), FormulaStatus::Matches,
        "published with the lines at x=0, x=1 in that order; that order composes to z + 2"));

    out.push_back(make_preset("fig11-translation-down", "fig11,fig13-down",
                              GenCircle::circle(0.0, sqrt3), GenCircle::circle(0.0, 1.0), "z/3",
                              Mobius(1.0, 0.0, 0.0, 3.0), FormulaStatus::Matches));

    out.push_back(make_preset("fig12-translation-up", "fig12,fig13-up",
                              GenCircle::circle(0.0, 1.0), GenCircle::circle(0.0, 2.0), "4z",
                              Mobius(4.0, 0.0, 0.0, 1.0), FormulaStatus::Matches));

    out.push_back(make_preset("fig14-landscape-down", "fig14", GenCircle::circle(0.0, sqrt3),
                              GenCircle::circle(0.0, 1.0), "z/3", Mobius(1.0, 0.0, 0.0, 3.0),
                              FormulaStatus::Matches));

    out.push_back(make_preset("fig14-landscape-up", "fig14-up", GenCircle::circle(0.0, 1.0),
                              GenCircle::circle(0.0, 2.0), "4z", Mobius(4.0, 0.0, 0.0, 1.0),
                              FormulaStatus::Matches));

    out.push_back(make_preset(
        "fig15-rotation", "fig15", GenCircle::circle(2.0, 13.0 / 8.0),
        GenCircle::circle(-1.0, 21.0 / 8.0), "(-249z - 667)/(192z + 215)",
        Mobius(-249.0, -667.0, 192.0, 215.0), FormulaStatus::DocumentedDiscrepancy,
        "the circles compose to (249z - 667)/(192z - 215); the published formula is its "
        "mirror z -> -f(-z). Fixed points agree with the circle intersections.",
        Mobius(249.0, -667.0, 192.0, -215.0)));

    out.push_back(make_preset(
        "fig16-dini-rotation", "fig16", GenCircle::circle(C(4 * pi + pi / 8), 4 * pi),
        GenCircle::circle(C(pi / 8), 4 * pi), "(-261pi z + 1057pi^2)/(-64z + 8pi)",
        Mobius(-261 * pi, 1057 * pi * pi, -64.0, 8 * pi), FormulaStatus::DocumentedDiscrepancy,
        "the circles compose to (-264pi z + 1057pi^2)/(-64z + 8pi); 261 is a misprint",
        Mobius(-264 * pi, 1057 * pi * pi, -64.0, 8 * pi)));

    out.push_back(make_preset(
        "fig16-dini-rotation-mirror", "fig16-mirror",
        GenCircle::circle(C(2 * pi - (4 * pi + pi / 8)), 4 * pi),
        GenCircle::circle(C(2 * pi - pi / 8), 4 * pi), "(-136pi z - 769pi^2)/(64z - 120pi)",
        Mobius(-136 * pi, -769 * pi * pi, 64.0, -120 * pi), FormulaStatus::Matches));

    out.push_back(make_preset("fig17-dini-translation", "fig17", GenCircle::circle(0.0, 3.0),
                              GenCircle::circle(0.0, 1.0), "z/9", Mobius(1.0, 0.0, 0.0, 9.0),
                              FormulaStatus::Matches));
    return out;
}

}  // namespace

const std::vector<Preset>& motion_presets() {
    static const std::vector<Preset> presets = build_presets();
    return presets;
}

const Preset& find_preset(std::string_view name) {
    for (const auto& p : motion_presets()) {
        if (p.name == name) return p;
    }
    throw MotionError("unknown preset '" + std::string(name) + "'");
}

}  // namespace hyperphase
