#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperphase/colorings.hpp"
#include "hyperphase/mesh.hpp"
#include "hyperphase/raster.hpp"

namespace hyperphase {

enum class OutputFormat { Ppm, Png, Ply };
enum class DomainKind { Disc, HalfPlane, Rectangle };
enum class SurfaceKind { Pseudosphere, Dini, Hemisphere, Sphere, DiscLandscape, PlaneLandscape };

// One renderable scene. A scene with `surface` set is a mesh (PLY);
// otherwise it is an image over `domain` (PPM or PNG).
struct SceneConfig {
    std::filesystem::path output;
    std::optional<OutputFormat> format;  // inferred from the extension when empty
    ColorSpec color;

    DomainKind domain = DomainKind::Disc;
    ParamRange re{-2.0, 2.0};
    ParamRange im{-2.0, 2.0};
    int resolution = 512;
    int supersample = 2;

    // Contour composite: height family drawn as band edges over the disc.
    std::optional<DiscFamily> contour_height;
    int bands = 12;
    double darken = 0.45;

    std::optional<SurfaceKind> surface;
    std::optional<ParamRange> u_range;  // theta / azimuth / Re z
    std::optional<ParamRange> v_range;  // sigma / polar angle / radius / Im z
    int nu = 256;
    int nv = 64;
    double twist = 0.15;
    std::optional<DiscFamily> landscape_height;
    double exaggeration = 0.35;
    double modulus_ceiling = 6.0;

    int threads = 0;
};

OutputFormat resolve_format(const SceneConfig& config);

// Encoded output bytes of a scene. Throws SceneError for inconsistent configs.
std::string render_scene_bytes(const SceneConfig& config);
void render_scene(const SceneConfig& config);

struct FigureInfo {
    std::string name;
    std::string description;
};

const std::vector<FigureInfo>& figure_catalog();

// Scene reproducing a figure at its canonical framing; the output path is
// left empty. Throws SceneError for unknown names.
SceneConfig figure_scene(std::string_view name);

std::optional<SurfaceKind> parse_surface_kind(std::string_view text);
std::optional<Coloring> parse_coloring(std::string_view text);
std::optional<DomainKind> parse_domain_kind(std::string_view text);

}  // namespace hyperphase
