#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "hyperphase/colorings.hpp"

namespace hyperphase {

struct Image {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;  // row-major, row 0 at the top

    Image() = default;
    Image(int w, int h, Rgb fill = {});

    Rgb& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    const Rgb& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

// The square [-1, 1]^2 around the unit disc; pixels whose centers lie
// outside the disc are white.
struct DiscDomain {
    int resolution = 512;
};

// A window of the upper half-plane; im_min must be positive.
struct HalfPlaneDomain {
    double re_min = -1.0;
    double re_max = 7.5;
    double im_min = 0.05;
    double im_max = 8.0;
    int resolution = 512;
};

// A window of the complex plane.
struct RectangleDomain {
    double re_min = -2.0;
    double re_max = 2.0;
    double im_min = -2.0;
    double im_max = 2.0;
    int resolution = 512;
};

using SceneDomain = std::variant<DiscDomain, HalfPlaneDomain, RectangleDomain>;

struct PixelGrid {
    int width;
    int height;
    double x_min, x_max, y_min, y_max;
};

// Pixel dimensions and bounds; throws SceneError for invalid domains.
PixelGrid pixel_grid(const SceneDomain& domain);

// Domain point of sub-sample (sx, sy) of pixel (x, y) on an n x n stratified
// grid; n = 1 gives the pixel center.
Complex sample_point(const PixelGrid& grid, int x, int y, int sx = 0, int sy = 0, int n = 1);

// Chart used to read domain points for a given coloring. Disc domains are
// read as the Klein disc for Klein colorings and for the Beltrami
// hemisphere, which is then viewed from straight above.
Chart domain_chart(const SceneDomain& domain, Coloring coloring);

// Each pixel is the average of supersample^2 stratified samples.
Image render(const ColorSpec& spec, const SceneDomain& domain, int supersample = 1,
             int threads = 0);

struct ContourOptions {
    int bands = 12;
    double darken = 0.45;
    int supersample = 1;
    int threads = 0;
};

// Disc coloring of one family with the height of the other family drawn as
// darkened band edges. Throws SceneError when both families coincide or the
// coloring is not a disc coloring.
Image render_contours(const ColorSpec& color_spec, DiscFamily height_family,
                      const DiscDomain& domain, const ContourOptions& options = {});

// Binary PPM: "P6 <w> <h> 255\n" followed by RGB bytes.
std::string encode_ppm(const Image& img);
void write_ppm(const Image& img, const std::filesystem::path& path);

std::string encode_png(const Image& img);
void write_png(const Image& img, const std::filesystem::path& path);

}  // namespace hyperphase
