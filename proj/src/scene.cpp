#include "hyperphase/scene.hpp"

#include <algorithm>
#include <cctype>

#include "hyperphase/error.hpp"
#include "hyperphase/motions.hpp"
#include "io_util.hpp"

namespace hyperphase {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

Surface build_surface(const SceneConfig& c) {
    const Mobius f = c.color.motion;
    switch (*c.surface) {
        case SurfaceKind::Pseudosphere: return PseudosphereSurface{};
        case SurfaceKind::Dini: return DiniSurface{c.twist};
        case SurfaceKind::Hemisphere: return HemisphereSurface{};
        case SurfaceKind::Sphere: return SphereSurface{};
        case SurfaceKind::DiscLandscape: {
            if (!c.landscape_height) throw SceneError("disc landscape needs a height family");
            const DiscFamily family = *c.landscape_height;
            const bool omit = c.color.conjugation_omitted;
            return DiscLandscapeSurface{
                [f, family, omit](const Complex& w) { return height_disc(f, w, family, omit); },
                c.exaggeration};
        }
        case SurfaceKind::PlaneLandscape: {
            const double ceiling = c.modulus_ceiling;
            if (c.color.function) {
                const ComplexFunction g = c.color.function;
                return PlaneLandscapeSurface{
                    [g, ceiling](const Complex& z) { return modulus_height(g, z, ceiling); }};
            }
            return PlaneLandscapeSurface{
                [f, ceiling](const Complex& z) { return modulus_height(f, z, ceiling); }};
        }
    }
    throw SceneError("unknown surface");
}

SceneDomain build_domain(const SceneConfig& c) {
    switch (c.domain) {
        case DomainKind::Disc: return DiscDomain{c.resolution};
        case DomainKind::HalfPlane:
            return HalfPlaneDomain{c.re.lo, c.re.hi, c.im.lo, c.im.hi, c.resolution};
        case DomainKind::Rectangle:
            return RectangleDomain{c.re.lo, c.re.hi, c.im.lo, c.im.hi, c.resolution};
    }
    throw SceneError("unknown domain");
}

SceneConfig disc_scene(Coloring coloring, const Mobius& f) {
    SceneConfig c;
    c.color.coloring = coloring;
    c.color.motion = f;
    c.domain = DomainKind::Disc;
    return c;
}

SceneConfig mesh_scene(SurfaceKind surface, Coloring coloring, const Mobius& f) {
    SceneConfig c;
    c.surface = surface;
    c.color.coloring = coloring;
    c.color.motion = f;
    return c;
}

SceneConfig pseudosphere_scene(const Mobius& f) {
    SceneConfig c = mesh_scene(SurfaceKind::Pseudosphere, Coloring::Pseudo, f);
    c.u_range = ParamRange{0.0, kTwoPi};
    c.v_range = ParamRange{0.0, 3.0};
    c.nu = 257;
    c.nv = 97;
    return c;
}

SceneConfig halfplane_scene(const Mobius& f, ParamRange re, ParamRange im) {
    SceneConfig c;
    c.color.coloring = Coloring::Pseudo;
    c.color.motion = f;
    c.domain = DomainKind::HalfPlane;
    c.re = re;
    c.im = im;
    return c;
}

SceneConfig contour_scene(Coloring coloring, DiscFamily height, const Mobius& f) {
    SceneConfig c = disc_scene(coloring, f);
    c.contour_height = height;
    return c;
}

SceneConfig landscape_scene(Coloring coloring, DiscFamily height, const Mobius& f) {
    SceneConfig c = mesh_scene(SurfaceKind::DiscLandscape, coloring, f);
    c.landscape_height = height;
    c.u_range = ParamRange{0.0, kTwoPi};
    c.v_range = ParamRange{0.0, 0.995};
    c.nu = 361;
    c.nv = 181;
    return c;
}

SceneConfig dini_scene(const Mobius& f, ParamRange theta, double twist, int nu, int nv) {
    SceneConfig c = mesh_scene(SurfaceKind::Dini, Coloring::Pseudo, f);
    c.u_range = theta;
    c.v_range = ParamRange{0.0, 3.0};
    c.twist = twist;
    c.nu = nu;
    c.nv = nv;
    return c;
}

struct FigureEntry {
    FigureInfo info;
    SceneConfig (*make)();
};

const Mobius& preset(std::string_view name) { return find_preset(name).motion; }

const std::vector<FigureEntry>& figure_entries() {
    static const std::vector<FigureEntry> entries = [] {
        std::vector<FigureEntry> e;
        e.push_back({{"fig1", "phase portrait of the identity on [-2,2]^2 (ppm)"}, [] {
                         SceneConfig c;
                         c.color.coloring = Coloring::ComplexPhase;
                         c.domain = DomainKind::Rectangle;
                         return c;
                     }});
        e.push_back({{"fig2", "analytic landscape of the inversion in K over [-2,2]^2 (ply)"}, [] {
                         SceneConfig c = mesh_scene(SurfaceKind::PlaneLandscape,
                                                    Coloring::ComplexPhase, Mobius::identity());
                         c.color.function = invert_in_k;
                         c.u_range = ParamRange{-2.0, 2.0};
                         c.v_range = ParamRange{-2.0, 2.0};
                         c.nu = 201;
                         c.nv = 201;
                         c.modulus_ceiling = 3.0;
                         return c;
                     }});
        e.push_back({{"fig3", "identity phase portrait on the Riemann sphere (ply)"}, [] {
                         SceneConfig c = mesh_scene(SurfaceKind::Sphere, Coloring::ComplexPhase,
                                                    Mobius::identity());
                         c.nu = 257;
                         c.nv = 129;
                         return c;
                     }});
        e.push_back({{"fig4", "pseudosphere coloring of the identity in the half-plane (ppm)"}, [] {
                         return halfplane_scene(Mobius::identity(), {-1.0, kTwoPi + 1.0},
                                                {0.05, 8.0});
                     }});
        e.push_back({{"fig5", "pseudosphere colored by rim angle, identity (ply)"},
                     [] { return pseudosphere_scene(Mobius::identity()); }});
        e.push_back({{"fig5-naive", "naive phase portrait arg(T_P) on the pseudosphere (ply)"}, [] {
                         SceneConfig c = pseudosphere_scene(Mobius::identity());
                         c.color.coloring = Coloring::ComplexPhase;
                         return c;
                     }});
        e.push_back({{"fig6", "h-rotation 4pi^2/(2pi - z) on the pseudosphere (ply)"},
                     [] { return pseudosphere_scene(preset("fig8-rotation")); }});
        e.push_back({{"fig7", "h-rotation 4pi^2/(2pi - z) in the half-plane (ppm)"}, [] {
                         SceneConfig c = halfplane_scene(preset("fig8-rotation"),
                                                         {-kPi, 5 * kPi}, {0.01, 3 * kPi});
                         c.resolution = 768;
                         return c;
                     }});
        e.push_back({{"fig8", "h-rotation 4pi^2/(2pi - z) on the Poincare disc, asymptotic (ppm)"},
                     [] { return disc_scene(Coloring::DiscAsymptotic, preset("fig8-rotation")); }});
        e.push_back({{"fig9", "asymptotic disc coloring of the identity (ppm)"},
                     [] { return disc_scene(Coloring::DiscAsymptotic, Mobius::identity()); }});
        e.push_back({{"fig9-noconj", "as fig9 with the conjugation step removed (ppm)"}, [] {
                         SceneConfig c = disc_scene(Coloring::DiscAsymptotic, Mobius::identity());
                         c.color.conjugation_omitted = true;
                         return c;
                     }});
        e.push_back({{"fig10", "limit rotation z - 2 on the disc (ppm)"}, [] {
                         return disc_scene(Coloring::DiscAsymptotic, preset("fig10-limit-rotation"));
                     }});
        e.push_back({{"fig10-pseudo", "limit rotation z - 2 on the pseudosphere (ply)"},
                     [] { return pseudosphere_scene(preset("fig10-limit-rotation")); }});
        e.push_back({{"fig11", "translation z/3 on the disc, asymptotic (ppm)"}, [] {
                         return disc_scene(Coloring::DiscAsymptotic,
                                           preset("fig11-translation-down"));
                     }});
        e.push_back({{"fig11-pseudo", "translation z/3 on the pseudosphere (ply)"},
                     [] { return pseudosphere_scene(preset("fig11-translation-down")); }});
        e.push_back({{"fig12", "translation 4z on the disc, asymptotic (ppm)"}, [] {
                         return disc_scene(Coloring::DiscAsymptotic, preset("fig12-translation-up"));
                     }});
        e.push_back({{"fig12-pseudo", "translation 4z on the pseudosphere (ply)"},
                     [] { return pseudosphere_scene(preset("fig12-translation-up")); }});
        e.push_back({{"fig13", "ultra-parallel disc coloring of the identity (ppm)"},
                     [] { return disc_scene(Coloring::DiscUltraparallel, Mobius::identity()); }});
        e.push_back({{"fig13-down", "translation z/3, ultra-parallel coloring (ppm)"}, [] {
                         return disc_scene(Coloring::DiscUltraparallel,
                                           preset("fig11-translation-down"));
                     }});
        e.push_back({{"fig13-up", "translation 4z, ultra-parallel coloring (ppm)"}, [] {
                         return disc_scene(Coloring::DiscUltraparallel,
                                           preset("fig12-translation-up"));
                     }});
        e.push_back({{"fig14", "landscape z/3: ultra-parallel color, asymptotic height (ply)"}, [] {
                         return landscape_scene(Coloring::DiscUltraparallel, DiscFamily::Asymptotic,
                                                preset("fig14-landscape-down"));
                     }});
        e.push_back({{"fig14-up", "landscape 4z: asymptotic color, ultra-parallel height (ply)"},
                     [] {
                         return landscape_scene(Coloring::DiscAsymptotic,
                                                DiscFamily::Ultraparallel,
                                                preset("fig14-landscape-up"));
                     }});
        e.push_back({{"fig15", "contours: rotation, asymptotic color, ultra-parallel height (ppm)"},
                     [] {
                         return contour_scene(Coloring::DiscAsymptotic, DiscFamily::Ultraparallel,
                                              preset("fig15-rotation"));
                     }});
        e.push_back({{"fig15-identity",
                      "contours: identity, ultra-parallel color, asymptotic height (ppm)"},
                     [] {
                         return contour_scene(Coloring::DiscUltraparallel, DiscFamily::Asymptotic,
                                              Mobius::identity());
                     }});
        e.push_back({{"fig16", "rotation on Dini's surface, theta in [0, 7pi] (ply)"}, [] {
                         return dini_scene(preset("fig16-dini-rotation"), {0.0, 7 * kPi}, 0.15,
                                           1024, 256);
                     }});
        e.push_back({{"fig16-mirror", "mirrored rotation, opposite twist, theta in [-5pi, 2pi] (ply)"},
                     [] {
                         return dini_scene(preset("fig16-dini-rotation-mirror"),
                                           {-5 * kPi, 2 * kPi}, -0.15, 1024, 256);
                     }});
        e.push_back({{"fig17", "translation z/9 on Dini's surface, theta in [0, 15pi] (ply)"}, [] {
                         return dini_scene(preset("fig17-dini-translation"), {0.0, 15 * kPi}, 0.15,
                                           1024, 128);
                     }});
        e.push_back({{"beltrami1", "Beltrami hemisphere, asymptotic coloring (ply)"}, [] {
                         SceneConfig c = mesh_scene(SurfaceKind::Hemisphere, Coloring::BeltramiV1,
                                                    Mobius::identity());
                         c.nu = 257;
                         c.nv = 97;
                         return c;
                     }});
        e.push_back({{"beltrami2", "Beltrami hemisphere, ultra-parallel coloring (ply)"}, [] {
                         SceneConfig c = mesh_scene(SurfaceKind::Hemisphere, Coloring::BeltramiV2,
                                                    Mobius::identity());
                         c.nu = 257;
                         c.nv = 97;
                         return c;
                     }});
        e.push_back({{"klein1", "Klein disc, asymptotic coloring (ppm)"},
                     [] { return disc_scene(Coloring::KleinV1, Mobius::identity()); }});
        e.push_back({{"klein2", "Klein disc, ultra-parallel coloring (ppm)"},
                     [] { return disc_scene(Coloring::KleinV2, Mobius::identity()); }});
        return e;
    }();
    return entries;
}

}  // namespace

OutputFormat resolve_format(const SceneConfig& config) {
    if (config.format) return *config.format;
    const std::string ext = lower(config.output.extension().string());
    if (ext == ".ppm") return OutputFormat::Ppm;
    if (ext == ".png") return OutputFormat::Png;
    if (ext == ".ply") return OutputFormat::Ply;
    return config.surface ? OutputFormat::Ply : OutputFormat::Ppm;
}

std::string render_scene_bytes(const SceneConfig& c) {
    const OutputFormat format = resolve_format(c);
    if (c.surface) {
        if (format != OutputFormat::Ply) throw SceneError("mesh scenes are written as PLY");
        if (c.contour_height) throw SceneError("contours apply to disc images only");
        const Surface surface = build_surface(c);
        Mesh mesh = tessellate(surface, c.u_range.value_or(default_u_range(surface)),
                               c.v_range.value_or(default_v_range(surface)), c.nu, c.nv);
        mesh = colorize(std::move(mesh), c.color, surface_chart(surface), c.threads);
        return encode_ply(mesh);
    }
    if (format == OutputFormat::Ply) throw SceneError("image scenes are written as PPM or PNG");
    if (c.landscape_height) throw SceneError("landscape height needs --surface disc-landscape");

    Image img;
    if (c.contour_height) {
        if (c.domain != DomainKind::Disc) throw SceneError("contours need the disc domain");
        img = render_contours(c.color, *c.contour_height, DiscDomain{c.resolution},
                              {c.bands, c.darken, c.supersample, c.threads});
    } else {
        img = render(c.color, build_domain(c), c.supersample, c.threads);
    }
    return format == OutputFormat::Png ? encode_png(img) : encode_ppm(img);
}

void render_scene(const SceneConfig& config) {
    if (config.output.empty()) throw SceneError("no output path given");
    detail::write_file(config.output, render_scene_bytes(config));
}

const std::vector<FigureInfo>& figure_catalog() {
    static const std::vector<FigureInfo> infos = [] {
        std::vector<FigureInfo> out;
        for (const auto& e : figure_entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

SceneConfig figure_scene(std::string_view name) {
    for (const auto& e : figure_entries()) {
        if (e.info.name == name) return e.make();
    }
    throw SceneError("unknown figure '" + std::string(name) + "'");
}

std::optional<SurfaceKind> parse_surface_kind(std::string_view t) {
    if (t == "pseudosphere") return SurfaceKind::Pseudosphere;
    if (t == "dini") return SurfaceKind::Dini;
    if (t == "hemisphere" || t == "beltrami") return SurfaceKind::Hemisphere;
    if (t == "sphere") return SurfaceKind::Sphere;
    if (t == "disc-landscape") return SurfaceKind::DiscLandscape;
    if (t == "plane-landscape") return SurfaceKind::PlaneLandscape;
    return std::nullopt;
}

std::optional<Coloring> parse_coloring(std::string_view t) {
    for (Coloring c : {Coloring::ComplexPhase, Coloring::Pseudo, Coloring::DiscAsymptotic,
                       Coloring::DiscUltraparallel, Coloring::BeltramiV1, Coloring::BeltramiV2,
                       Coloring::KleinV1, Coloring::KleinV2}) {
        if (to_string(c) == t) return c;
    }
    return std::nullopt;
}

std::optional<DomainKind> parse_domain_kind(std::string_view t) {
    if (t == "disc") return DomainKind::Disc;
    if (t == "halfplane") return DomainKind::HalfPlane;
    if (t == "rect" || t == "rectangle") return DomainKind::Rectangle;
    return std::nullopt;
}

}  // namespace hyperphase
