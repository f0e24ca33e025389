#include <gtest/gtest.h>
#include <zlib.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "hyperphase/error.hpp"
#include "hyperphase/motions.hpp"
#include "hyperphase/raster.hpp"
#include "support/oracles.hpp"

using namespace hyperphase;
using oracle::cd;
using oracle::pi;

namespace {

ColorSpec disc_spec(Coloring c, Mobius m = Mobius::identity()) {
    ColorSpec s;
    s.coloring = c;
    s.motion = m;
    return s;
}

double pixel_size(const PixelGrid& g) { return (g.x_max - g.x_min) / g.width; }

cd center_of(const PixelGrid& g, int x, int y) { return sample_point(g, x, y).value(); }

// Distance from p to the disc image of the semicircle |z| = r.
double distance_to_ring(cd p, double r) {
    double best = HUGE_VAL;
    for (int k = 0; k < 4000; ++k) {
        const cd q = halfplane_to_disc(Complex(std::polar(r, pi * (k + 0.5) / 4000))).value();
        best = std::min(best, std::abs(p - q));
    }
    return best;
}

std::vector<unsigned char> png_pixels(const std::string& png, int& w, int& h) {
    auto be32 = [&](std::size_t at) {
        return (static_cast<unsigned>(static_cast<unsigned char>(png[at])) << 24) |
               (static_cast<unsigned>(static_cast<unsigned char>(png[at + 1])) << 16) |
               (static_cast<unsigned>(static_cast<unsigned char>(png[at + 2])) << 8) |
               static_cast<unsigned>(static_cast<unsigned char>(png[at + 3]));
    };
    std::string idat;
    std::size_t at = 8;
    while (at + 8 <= png.size()) {
        const unsigned len = be32(at);
        const std::string type = png.substr(at + 4, 4);
        const std::string body = png.substr(at + 8, len);
        const unsigned crc = be32(at + 8 + len);
        const uLong want = crc32(crc32(0, reinterpret_cast<const Bytef*>(type.data()), 4),
                                 reinterpret_cast<const Bytef*>(body.data()), len);
        EXPECT_EQ(crc, static_cast<unsigned>(want)) << type;
        if (type == "IHDR") {
            w = static_cast<int>(be32(at + 8));
            h = static_cast<int>(be32(at + 12));
        }
        if (type == "IDAT") idat += body;
        at += 12 + len;
    }
    std::vector<unsigned char> raw(static_cast<std::size_t>(h) * (3 * w + 1));
    uLongf raw_len = raw.size();
    EXPECT_EQ(uncompress(raw.data(), &raw_len, reinterpret_cast<const Bytef*>(idat.data()), idat.size()), Z_OK);
    std::vector<unsigned char> rgb;
    for (int y = 0; y < h; ++y) {
        const unsigned char* row = raw.data() + static_cast<std::size_t>(y) * (3 * w + 1);
        EXPECT_EQ(row[0], 0) << "filter";
        rgb.insert(rgb.end(), row + 1, row + 1 + 3 * w);
    }
    return rgb;
}

}  // namespace

TEST(Grid, PixelCentersAndOrientation) {
    const PixelGrid g = pixel_grid(DiscDomain{4});
    EXPECT_EQ(g.width, 4);
    EXPECT_EQ(g.height, 4);
    const cd top_left = center_of(g, 0, 0);
    EXPECT_DOUBLE_EQ(top_left.real(), -0.75);
    EXPECT_DOUBLE_EQ(top_left.imag(), 0.75);  // row 0 is the top
    EXPECT_DOUBLE_EQ(center_of(g, 3, 3).imag(), -0.75);

    const PixelGrid hp = pixel_grid(HalfPlaneDomain{0, 4, 1, 3, 8});
    EXPECT_EQ(hp.height, 4);
    EXPECT_THROW(pixel_grid(HalfPlaneDomain{0, 4, 0, 3, 8}), SceneError);
    EXPECT_THROW(pixel_grid(HalfPlaneDomain{4, 0, 1, 3, 8}), SceneError);
    EXPECT_THROW(pixel_grid(DiscDomain{0}), SceneError);
}

TEST(Render, CenterPixelHue) {
    // Odd resolution so that one pixel center sits on the disc center.
    const SceneDomain dom = DiscDomain{65};
    const ColorSpec spec = disc_spec(Coloring::DiscAsymptotic);
    const PixelGrid g = pixel_grid(dom);
    const Complex c = sample_point(g, 32, 32);
    EXPECT_EQ(c, Complex(0, 0));
    const HueValue h = evaluate(spec, c, domain_chart(dom, spec.coloring));
    EXPECT_NEAR(h.angle(), 3 * pi / 2, 1e-6);
    const Image img = render(spec, dom, 1);
    EXPECT_EQ(img.at(32, 32), hue_to_rgb(HueValue::hue(3 * pi / 2)));
    // Even resolution: the four central pixels straddle w = 0.
    const Image even = render(spec, DiscDomain{64}, 1);
    for (auto [x, y] : {std::pair{31, 31}, {32, 31}, {31, 32}, {32, 32}}) {
        EXPECT_LT(oracle::angle_gap(oracle::rgb_hue(even.at(x, y)), 3 * pi / 2), 0.1);
    }
}

TEST(Render, UltraparallelHueConstantAlongRings) {
    const SceneDomain dom = DiscDomain{64};
    const Image img = render(disc_spec(Coloring::DiscUltraparallel), dom, 1);
    const PixelGrid g = pixel_grid(dom);
    int rings = 0;
    for (double r : {0.3, 0.6, 1.0, 1.7, 3.0}) {
        std::vector<double> hues;
        for (int y = 0; y < g.height; ++y) {
            for (int x = 0; x < g.width; ++x) {
                const cd p = center_of(g, x, y);
                if (std::abs(p) > 0.97) continue;
                if (distance_to_ring(p, r) < 1e-3) hues.push_back(oracle::rgb_hue(img.at(x, y)));
            }
        }
        if (hues.size() < 2) continue;
        ++rings;
        for (double hh : hues) EXPECT_LT(oracle::angle_gap(hh, hues[0]), 2e-2) << "r = " << r;
    }
    EXPECT_GE(rings, 2);
}

TEST(Render, WhiteExactlyOutsideDisc) {
    const SceneDomain dom = DiscDomain{101};
    const Image img = render(disc_spec(Coloring::DiscUltraparallel, find_preset("fig12-translation-up").motion), dom, 2);
    const PixelGrid g = pixel_grid(dom);
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
            const bool outside = std::abs(center_of(g, x, y)) > 1.0;
            EXPECT_EQ(img.at(x, y) == (Rgb{255, 255, 255}), outside) << x << "," << y;
        }
    }
}

TEST(Render, DeterministicAndThreadIndependent) {
    const ColorSpec spec = disc_spec(Coloring::DiscAsymptotic, find_preset("fig8-rotation").motion);
    const std::string a = encode_ppm(render(spec, DiscDomain{96}, 2, 1));
    const std::string b = encode_ppm(render(spec, DiscDomain{96}, 2, 1));
    const std::string c = encode_ppm(render(spec, DiscDomain{96}, 2, 4));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    setenv("HYPERPHASE_THREADS", "3", 1);
    EXPECT_EQ(encode_ppm(render(spec, DiscDomain{96}, 2)), a);
    unsetenv("HYPERPHASE_THREADS");
}

TEST(Render, SupersamplingStaysWithinLocalVariation) {
    const SceneDomain dom = DiscDomain{96};
    const ColorSpec spec = disc_spec(Coloring::DiscAsymptotic, find_preset("fig15-rotation").motion);
    const Image one = render(spec, dom, 1);
    const Image four = render(spec, dom, 4);
    const PixelGrid g = pixel_grid(dom);
    const double px = pixel_size(g);
    auto channel = [](const Rgb& c, int k) { return k == 0 ? c.r : k == 1 ? c.g : c.b; };
    int checked = 0;
    for (int y = 2; y < g.height - 2; ++y) {
        for (int x = 2; x < g.width - 2; ++x) {
            if (std::abs(center_of(g, x, y)) > 1.0 - 2.5 * px) continue;
            int bound = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    for (int k = 0; k < 3; ++k) {
                        bound = std::max(bound, std::abs(channel(one.at(x + dx, y + dy), k) - channel(one.at(x, y), k)));
                    }
                }
            }
            for (int k = 0; k < 3; ++k) {
                EXPECT_LE(std::abs(channel(four.at(x, y), k) - channel(one.at(x, y), k)), bound + 2);
            }
            ++checked;
        }
    }
    EXPECT_GT(checked, 5000);
}

TEST(Render, HalfPlaneAndRectangle) {
    ColorSpec pseudo;
    pseudo.coloring = Coloring::Pseudo;
    const Image img = render(pseudo, HalfPlaneDomain{-1, 7.5, 0.05, 8, 85}, 1);
    EXPECT_EQ(img.width, 85);
    // Left strip Re z < 0 is black under the identity.
    EXPECT_EQ(img.at(2, 10), (Rgb{0, 0, 0}));
    EXPECT_NE(img.at(40, 10), (Rgb{0, 0, 0}));

    ColorSpec phase;
    phase.coloring = Coloring::ComplexPhase;
    const Image rect = render(phase, RectangleDomain{-2, 2, -2, 2, 64}, 1);
    EXPECT_EQ(rect.at(63, 32), hue_to_rgb(color_complex(Mobius::identity(), sample_point(pixel_grid(RectangleDomain{-2, 2, -2, 2, 64}), 63, 32))));
}

TEST(Contours, BandEdgesFollowLevelRings) {
    const DiscDomain dom{128};
    const ColorSpec spec = disc_spec(Coloring::DiscAsymptotic);
    const int bands = 8;
    const Image base = render(spec, dom, 1);
    const Image lines = render_contours(spec, DiscFamily::Ultraparallel, dom, {bands, 0.45, 1, 0});
    const PixelGrid g = pixel_grid(SceneDomain{dom});
    const double px = pixel_size(g);

    // Height k / bands of the ultra-parallel family is the ring through the
    // boundary point at angle pi k / bands - pi / 2.
    std::vector<double> radii;
    for (int k = 1; k < bands; ++k) {
        const Complex b(std::polar(1.0, pi * k / bands - pi / 2));
        radii.push_back(disc_to_halfplane(b).re());
    }
    int dark = 0;
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
            if (lines.at(x, y) == base.at(x, y)) continue;
            ++dark;
            const cd p = center_of(g, x, y);
            double best = HUGE_VAL;
            for (double r : radii) best = std::min(best, distance_to_ring(p, std::abs(r)));
            EXPECT_LT(best, 1.0 * px + 1e-12) << x << "," << y;
        }
    }
    EXPECT_GT(dark, 100);

    // Every ring point well inside the disc has a darkened pixel nearby.
    for (double r : radii) {
        for (int k = 1; k < 40; ++k) {
            const cd q = halfplane_to_disc(Complex(std::polar(std::abs(r), pi * k / 40))).value();
            if (std::abs(q) > 0.9) continue;
            const int x = static_cast<int>((q.real() - g.x_min) / px);
            const int y = static_cast<int>((g.y_max - q.imag()) / px);
            bool found = false;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) found |= !(lines.at(x + dx, y + dy) == base.at(x + dx, y + dy));
            }
            EXPECT_TRUE(found) << "ring " << r << " sample " << k;
        }
    }
}

TEST(Contours, SingleBandAndInvalidComposites) {
    const DiscDomain dom{64};
    const ColorSpec spec = disc_spec(Coloring::DiscUltraparallel);
    EXPECT_EQ(encode_ppm(render_contours(spec, DiscFamily::Asymptotic, dom, {1, 0.45, 1, 0})),
              encode_ppm(render(spec, dom, 1)));
    EXPECT_THROW(render_contours(spec, DiscFamily::Ultraparallel, dom), SceneError);
    EXPECT_THROW(render_contours(disc_spec(Coloring::Pseudo), DiscFamily::Asymptotic, dom), SceneError);
}

TEST(Contours, Fig15PresetIsFast) {
    const auto start = std::chrono::steady_clock::now();
    const Image img = render_contours(disc_spec(Coloring::DiscAsymptotic, find_preset("fig15-rotation").motion),
                                      DiscFamily::Ultraparallel, DiscDomain{512});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(img.width, 512);
    EXPECT_LT(secs, 5.0);
}

TEST(Ppm, ExactBytes) {
    Image red(1, 1, Rgb{255, 0, 0});
    EXPECT_EQ(encode_ppm(red), std::string("P6 1 1 255\n\xFF\x00\x00", 14));
    Image two(2, 1);
    two.at(0, 0) = {1, 2, 3};
    two.at(1, 0) = {4, 5, 6};
    const std::string bytes = encode_ppm(two);
    EXPECT_EQ(bytes.substr(0, 11), "P6 2 1 255\n");
    EXPECT_EQ(bytes.substr(11), std::string("\x01\x02\x03\x04\x05\x06", 6));
}

TEST(Ppm, WriteAndErrors) {
    const auto path = std::filesystem::temp_directory_path() / "hyperphase_test_write.ppm";
    Image img(3, 2, Rgb{9, 8, 7});
    write_ppm(img, path);
    std::ifstream in(path, std::ios::binary);
    const std::string got((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(got, encode_ppm(img));
    std::filesystem::remove(path);
    try {
        write_ppm(img, "/nonexistent-dir/x.ppm");
        FAIL() << "expected IoError";
    } catch (const IoError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.ppm"), std::string::npos);
    }
}

TEST(Png, SamePixelsAsPpm) {
    const Image img = render(disc_spec(Coloring::DiscAsymptotic, find_preset("fig10-limit-rotation").motion), DiscDomain{40}, 2);
    const std::string png = encode_png(img);
    ASSERT_EQ(png.substr(0, 8), std::string("\x89PNG\r\n\x1a\n", 8));
    int w = 0, h = 0;
    const auto rgb = png_pixels(png, w, h);
    ASSERT_EQ(w, 40);
    ASSERT_EQ(h, 40);
    EXPECT_EQ(std::string(rgb.begin(), rgb.end()), encode_ppm(img).substr(std::string("P6 40 40 255\n").size()));
}
