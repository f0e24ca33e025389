#include "hyperphase/raster.hpp"

#include <array>
#include <cmath>
#include <zlib.h>

#include "hyperphase/error.hpp"
#include "hyperphase/parallel.hpp"
#include "io_util.hpp"

namespace hyperphase {

namespace {

constexpr Rgb kWhite{255, 255, 255};

int height_for(int resolution, double re_span, double im_span) {
    return std::max(1, static_cast<int>(std::lround(resolution * im_span / re_span)));
}

bool inside_disc(const Complex& center) { return std::norm(center.value()) <= 1.0; }

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

}  // namespace

Image::Image(int w, int h, Rgb fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

PixelGrid pixel_grid(const SceneDomain& domain) {
    return std::visit(
        [](const auto& d) -> PixelGrid {
            using T = std::decay_t<decltype(d)>;
            if (d.resolution <= 0) throw SceneError("resolution must be positive");
            if constexpr (std::is_same_v<T, DiscDomain>) {
                return {d.resolution, d.resolution, -1.0, 1.0, -1.0, 1.0};
            } else {
                if (!(d.re_min < d.re_max) || !(d.im_min < d.im_max)) {
                    throw SceneError("domain bounds must be ordered");
                }
                if constexpr (std::is_same_v<T, HalfPlaneDomain>) {
                    if (!(d.im_min > 0.0)) {
                        throw SceneError("half-plane domain needs im_min > 0");
                    }
                }
                return {d.resolution, height_for(d.resolution, d.re_max - d.re_min,
                                                 d.im_max - d.im_min),
                        d.re_min, d.re_max, d.im_min, d.im_max};
            }
        },
        domain);
}

Complex sample_point(const PixelGrid& grid, int x, int y, int sx, int sy, int n) {
    const double fx = (x + (sx + 0.5) / n) / grid.width;
    const double fy = (y + (sy + 0.5) / n) / grid.height;
    return Complex(grid.x_min + fx * (grid.x_max - grid.x_min),
                   grid.y_max - fy * (grid.y_max - grid.y_min));
}

Chart domain_chart(const SceneDomain& domain, Coloring coloring) {
    if (std::holds_alternative<HalfPlaneDomain>(domain)) return Chart::HalfPlane;
    if (std::holds_alternative<RectangleDomain>(domain)) return Chart::Plane;
    switch (coloring) {
        case Coloring::KleinV1:
        case Coloring::KleinV2:
        case Coloring::BeltramiV1:
        case Coloring::BeltramiV2: return Chart::Klein;
        default: return Chart::Disc;
    }
}

Image render(const ColorSpec& spec, const SceneDomain& domain, int supersample, int threads) {
    if (supersample <= 0) throw SceneError("supersample must be positive");
    const PixelGrid grid = pixel_grid(domain);
    const Chart chart = domain_chart(domain, spec.coloring);
    const bool masked = std::holds_alternative<DiscDomain>(domain);
    const double weight = 1.0 / (supersample * supersample);

    Image img(grid.width, grid.height);
    parallel_for(grid.height, resolve_threads(threads), [&](int y) {
        for (int x = 0; x < grid.width; ++x) {
            if (masked && !inside_disc(sample_point(grid, x, y))) {
                img.at(x, y) = kWhite;
                continue;
            }
            std::array<double, 3> acc{0.0, 0.0, 0.0};
            for (int sy = 0; sy < supersample; ++sy) {
                for (int sx = 0; sx < supersample; ++sx) {
                    const Complex p = sample_point(grid, x, y, sx, sy, supersample);
                    const auto c = hue_to_rgb_exact(evaluate(spec, p, chart));
                    for (int k = 0; k < 3; ++k) acc[k] += c[k];
                }
            }
            img.at(x, y) = {to_byte(acc[0] * weight), to_byte(acc[1] * weight),
                            to_byte(acc[2] * weight)};
        }
    });
    return img;
}

Image render_contours(const ColorSpec& color_spec, DiscFamily height_family,
                      const DiscDomain& domain, const ContourOptions& options) {
    DiscFamily color_family;
    if (color_spec.coloring == Coloring::DiscAsymptotic) {
        color_family = DiscFamily::Asymptotic;
    } else if (color_spec.coloring == Coloring::DiscUltraparallel) {
        color_family = DiscFamily::Ultraparallel;
    } else {
        throw SceneError("contour plots need a disc coloring");
    }
    if (color_family == height_family) {
        throw SceneError("contour height and coloring must use different line families");
    }
    if (options.bands <= 0) throw SceneError("bands must be positive");

    Image img = render(color_spec, domain, options.supersample, options.threads);
    const PixelGrid grid = pixel_grid(domain);
    const int w = grid.width;
    const int h = grid.height;
    constexpr int kOutside = -1;
    std::vector<int> band(static_cast<std::size_t>(w) * h, kOutside);
    parallel_for(h, resolve_threads(options.threads), [&](int y) {
        for (int x = 0; x < w; ++x) {
            const Complex p = sample_point(grid, x, y);
            if (!inside_disc(p)) continue;
            const double height =
                height_disc(color_spec.motion, p, height_family, color_spec.conjugation_omitted);
            band[static_cast<std::size_t>(y) * w + x] =
                std::min(options.bands - 1, static_cast<int>(height * options.bands));
        }
    });

    auto band_at = [&](int x, int y) { return band[static_cast<std::size_t>(y) * w + x]; };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int b = band_at(x, y);
            if (b == kOutside) continue;
            bool edge = false;
            constexpr std::array<std::array<int, 2>, 4> kNeighbors{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
            for (const auto& [dx, dy] : kNeighbors) {
                const int nx = x + dx, ny = y + dy;
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                const int nb = band_at(nx, ny);
                if (nb != kOutside && nb != b) edge = true;
            }
            if (edge) {
                Rgb& px = img.at(x, y);
                px = {to_byte(px.r * options.darken), to_byte(px.g * options.darken),
                      to_byte(px.b * options.darken)};
            }
        }
    }
    return img;
}

std::string encode_ppm(const Image& img) {
    std::string out = "P6 " + std::to_string(img.width) + " " + std::to_string(img.height) +
                      " 255\n";
    out.reserve(out.size() + img.pixels.size() * 3);
    for (const Rgb& p : img.pixels) {
        out.push_back(static_cast<char>(p.r));
        out.push_back(static_cast<char>(p.g));
        out.push_back(static_cast<char>(p.b));
    }
    return out;
}

void write_ppm(const Image& img, const std::filesystem::path& path) {
    detail::write_file(path, encode_ppm(img));
}

namespace {

void put_u32(std::string& s, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) s.push_back(static_cast<char>((v >> shift) & 0xff));
}

void put_chunk(std::string& out, const char* type, const std::string& data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    std::string body(type, 4);
    body += data;
    out += body;
    put_u32(out, static_cast<std::uint32_t>(
                     crc32(0, reinterpret_cast<const Bytef*>(body.data()), body.size())));
}

}  // namespace

std::string encode_png(const Image& img) {
    std::string raw;
    raw.reserve(static_cast<std::size_t>(img.height) * (1 + 3 * img.width));
    for (int y = 0; y < img.height; ++y) {
        raw.push_back(0);  // filter: none
        for (int x = 0; x < img.width; ++x) {
            const Rgb& p = img.at(x, y);
            raw.push_back(static_cast<char>(p.r));
            raw.push_back(static_cast<char>(p.g));
            raw.push_back(static_cast<char>(p.b));
        }
    }
    uLongf packed_size = compressBound(raw.size());
    std::string packed(packed_size, '\0');
    if (compress2(reinterpret_cast<Bytef*>(packed.data()), &packed_size,
                  reinterpret_cast<const Bytef*>(raw.data()), raw.size(), 6) != Z_OK) {
        throw IoError("png compression failed");
    }
    packed.resize(packed_size);

    std::string ihdr;
    put_u32(ihdr, static_cast<std::uint32_t>(img.width));
    put_u32(ihdr, static_cast<std::uint32_t>(img.height));
    ihdr += std::string("\x08\x02\x00\x00\x00", 5);  // 8-bit RGB

    std::string out("\x89PNG\r\n\x1a\n", 8);
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", packed);
    put_chunk(out, "IEND", {});
    return out;
}

void write_png(const Image& img, const std::filesystem::path& path) {
    detail::write_file(path, encode_png(img));
}

}  // namespace hyperphase
