#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperphase/colorings.hpp"
#include "hyperphase/models.hpp"

namespace hyperphase {

struct Mesh {
    std::vector<Point3> vertices;
    std::vector<Rgb> colors;  // parallel to vertices
    std::vector<std::array<std::uint32_t, 3>> faces;
    // Surface parameter (u, v) each vertex was generated from.
    std::vector<std::array<double, 2>> params;
};

// u = theta, v = sigma >= 0. Seam-welded when theta spans exactly 2pi.
struct PseudosphereSurface {};

// u = theta (unrolled, never welded), v = sigma >= 0.
struct DiniSurface {
    double twist = 0.15;
};

// Beltrami hemisphere: u = azimuth, v = polar angle from the apex in [0, pi/2].
struct HemisphereSurface {};

// Riemann sphere: u = azimuth, v = polar angle from the north pole in [0, pi].
struct SphereSurface {};

using HeightFunction = std::function<double(const Complex&)>;

// Poincare disc with a height field: u = azimuth, v = radius in [0, 1].
struct DiscLandscapeSurface {
    HeightFunction height;
    double exaggeration = 0.35;
};

// Analytic landscape over a rectangle of the plane: u = Re z, v = Im z.
struct PlaneLandscapeSurface {
    HeightFunction height;
    double scale = 1.0;
};

using Surface = std::variant<PseudosphereSurface, DiniSurface, HemisphereSurface, SphereSurface,
                             DiscLandscapeSurface, PlaneLandscapeSurface>;

struct ParamRange {
    double lo = 0.0;
    double hi = 1.0;
};

ParamRange default_u_range(const Surface& surface);
ParamRange default_v_range(const Surface& surface);

// Grid of nu x nv parameter samples split along the (u,v)->(u+1,v+1)
// diagonal. A full 2pi period in u is welded, rows collapsing to one point
// (poles, disc center) share a single vertex, and zero-area triangles are
// dropped. Throws SceneError for invalid ranges or counts.
Mesh tessellate(const Surface& surface, ParamRange u, ParamRange v, int nu, int nv);

// Maps a surface parameter to a sample point and the chart it is read in.
using SurfaceChart = std::function<std::pair<Complex, Chart>(double u, double v)>;

SurfaceChart surface_chart(const Surface& surface);

// Colors every vertex by `spec` evaluated at the vertex's surface parameter.
Mesh colorize(Mesh mesh, const ColorSpec& spec, const SurfaceChart& chart, int threads = 0);

// ASCII PLY 1.0 with float x/y/z, uchar red/green/blue and a face list.
std::string encode_ply(const Mesh& mesh);
void write_ply(const Mesh& mesh, const std::filesystem::path& path);

// Reads the ASCII PLY subset produced by write_ply.
Mesh parse_ply(const std::string& text);
Mesh read_ply(const std::filesystem::path& path);

}  // namespace hyperphase
