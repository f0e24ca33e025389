#include "hyperphase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "hyperphase/colorings.hpp"
#include "hyperphase/models.hpp"
#include "hyperphase/motions.hpp"

namespace hyperphase {

namespace {

using cd = std::complex<double>;

std::vector<Complex> upper_half_plane_samples(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-10.0, 10.0);
    std::uniform_real_distribution<double> log_im(-3.0, 3.0);
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(re(rng), std::exp(log_im(rng)));
    return out;
}

std::vector<Complex> disc_samples(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(std::polar(0.999 * std::sqrt(u(rng)), kTwoPi * u(rng)));
    }
    return out;
}

// Worst relative pointwise difference over samples, skipping points near a pole.
double pointwise_error(const Mobius& m1, const Mobius& m2, const std::vector<Complex>& pts) {
    double worst = 0.0;
    for (const Complex& z : pts) {
        const Complex a = m1(z), b = m2(z);
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() != b.is_infinite()) return HUGE_VAL;
            continue;
        }
        const double scale = std::max(1.0, std::abs(a.value()));
        worst = std::max(worst, std::abs(a.value() - b.value()) / scale);
    }
    return worst;
}

CheckResult check(std::string name, double error, double tol, std::string detail = {}) {
    return {std::move(name), error < tol, error, tol, std::move(detail)};
}

// Passes when `value` exceeds `threshold` (reported as err/tol).
CheckResult at_least(std::string name, double value, double threshold) {
    return {std::move(name), value > threshold, value, threshold, "must exceed tol"};
}

double angle_gap(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

// Largest hue spread within a family, smallest gap between family hues.
std::pair<double, double> family_hues(const std::vector<std::vector<Complex>>& families,
                                      DiscFamily family) {
    const Mobius id = Mobius::identity();
    double spread = 0.0;
    std::vector<double> hues;
    for (const auto& line : families) {
        const double h0 = color_disc(id, line.front(), family).angle();
        for (const Complex& w : line) {
            spread = std::max(spread, angle_gap(color_disc(id, w, family).angle(), h0));
        }
        hues.push_back(h0);
    }
    double separation = HUGE_VAL;
    for (std::size_t i = 0; i < hues.size(); ++i) {
        for (std::size_t j = i + 1; j < hues.size(); ++j) {
            separation = std::min(separation, angle_gap(hues[i], hues[j]));
        }
    }
    return {spread, separation};
}

}  // namespace

std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> out;
    const auto samples = upper_half_plane_samples(100, 17);

    for (const Preset& p : motion_presets()) {
        if (p.status == FormulaStatus::Matches && p.expected) {
            out.push_back(check("preset " + p.name + " = " + p.printed,
                                pointwise_error(p.motion, *p.expected, samples), 1e-10));
            continue;
        }
        if (p.corrected) {
            out.push_back(check("preset " + p.name + " = derived closed form",
                                pointwise_error(p.motion, *p.corrected, samples), 1e-10,
                                "printed: " + p.printed));
        }
        if (p.first.is_circle() && p.second.is_circle()) {
            double worst = 0.0;
            for (const Complex& fp : fixed_points(p.motion)) {
                if (fp.is_infinite()) {
                    worst = HUGE_VAL;
                    continue;
                }
                for (const GenCircle& g : {p.first, p.second}) {
                    const auto& c = g.as_circle();
                    worst = std::max(worst, std::abs(std::abs(fp.value() - c.center) - c.radius));
                }
            }
            out.push_back(check("preset " + p.name + " fixed points on both circles", worst, 1e-9));
        }
    }

    // Round trips.
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-10.0, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Complex z(u(rng), u(rng));
            const Complex back = sphere_to_plane(stereo_to_sphere(z));
            worst = std::max(worst, distance(back, z) / std::max(1.0, std::abs(z.value())));
        }
        out.push_back(check("round trip plane -> sphere -> plane", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (const Complex& z : upper_half_plane_samples(1000, 6)) {
            const Complex back = pseudo_to_halfplane(halfplane_to_pseudo(z));
            worst = std::max(worst, distance(back, z) / std::max(1.0, std::abs(z.value())));
        }
        out.push_back(check("round trip half-plane -> pseudosphere -> half-plane", worst, 1e-12));
    }
    const auto disc = disc_samples(1000, 7);
    {
        double worst = 0.0;
        for (const Complex& w : disc) {
            worst = std::max(worst, distance(halfplane_to_disc(disc_to_halfplane(w)), w));
        }
        out.push_back(check("round trip disc -> half-plane -> disc", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (const Complex& w : disc) {
            worst = std::max(worst, distance(hemisphere_to_disc(disc_to_hemisphere(w)), w));
        }
        out.push_back(check("round trip disc -> hemisphere -> disc", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (const Complex& w : disc) {
            worst = std::max(worst, distance(klein_to_disc(disc_to_klein(w)), w));
        }
        out.push_back(check("round trip disc -> Klein -> disc", worst, 1e-12));
    }
    {
        const Mobius closed = halfplane_to_disc_mobius();
        double worst = 0.0;
        for (const Complex& z : upper_half_plane_samples(1000, 8)) {
            worst = std::max(worst, distance(halfplane_to_disc(z), closed(z)));
        }
        out.push_back(check("disc map: inversion + conjugation = (iz+1)/(z+i)", worst, 1e-12));
    }

    // Line-coloring constancy on 20 families of 50 samples.
    {
        std::vector<std::vector<Complex>> vertical, semicircles;
        for (int k = 0; k < 20; ++k) {
            const double x = -9.5 + k;
            const double r = std::exp(-3.0 + 6.0 * k / 19.0);
            std::vector<Complex> a, b;
            for (int j = 0; j < 50; ++j) {
                a.push_back(halfplane_to_disc(Complex(x, std::exp(-4.0 + 8.0 * j / 49.0))));
                const double t = kPi * (j + 0.5) / 50.0;
                b.push_back(halfplane_to_disc(Complex(std::polar(r, t))));
            }
            vertical.push_back(std::move(a));
            semicircles.push_back(std::move(b));
        }
        const auto [s1, sep1] = family_hues(vertical, DiscFamily::Asymptotic);
        out.push_back(check("asymptotic coloring constant along vertical lines", s1, 1e-9));
        out.push_back(at_least("asymptotic coloring separates lines", sep1, 1e-3));
        const auto [s2, sep2] = family_hues(semicircles, DiscFamily::Ultraparallel);
        out.push_back(check("ultra-parallel coloring constant along semicircles", s2, 1e-9));
        out.push_back(at_least("ultra-parallel coloring separates lines", sep2, 1e-3));
    }
    {
        const Mobius id = Mobius::identity();
        double worst = 0.0;
        for (const Complex& w : disc) {
            worst = std::max(worst, angle_gap(color_disc_ultraparallel(id, w, false).angle(),
                                              color_disc_ultraparallel(id, w, true).angle()));
        }
        out.push_back(check("ultra-parallel coloring unchanged without conjugation", worst, 1e-9));
    }
    return out;
}

bool print_verification(const std::vector<CheckResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(62) << r.name
           << " err=" << std::scientific << std::setprecision(2) << r.error
           << " tol=" << r.tolerance << std::defaultfloat;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << '\n';
    }
    os << (all ? "all checks passed" : "verification FAILED") << '\n';
    return all;
}

}  // namespace hyperphase
