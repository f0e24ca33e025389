#include "hyperphase/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyperphase/error.hpp"
#include "hyperphase/motions.hpp"
#include "hyperphase/parse.hpp"
#include "hyperphase/scene.hpp"
#include "hyperphase/verify.hpp"
#include "io_util.hpp"

namespace hyperphase {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<DiscFamily> family_from(int v) {
    if (v == 0) return std::nullopt;
    return v == 1 ? DiscFamily::Asymptotic : DiscFamily::Ultraparallel;
}

struct RenderFlags {
    std::string out, format, coloring = "disc1", domain = "disc";
    std::string motion, mobius, reflect, preset;
    std::string re, im, surface, theta, sigma;
    int res = 512, supersample = 2, bands = 12, nu = 256, nv = 64, threads = 0;
    int contour_height = 0, landscape_height = 0;
    double twist = 0.15, darken = 0.45, exaggeration = 0.35;
    bool no_conj = false;
    std::string config;
};

std::optional<OutputFormat> format_from(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "ppm") return OutputFormat::Ppm;
    if (s == "png") return OutputFormat::Png;
    if (s == "ply") return OutputFormat::Ply;
    throw SceneError("unknown format '" + s + "'");
}

Mobius motion_from(const RenderFlags& f) {
    int sources = 0;
    std::optional<Mobius> m;
    if (!f.motion.empty()) ++sources, m = parse_motion(f.motion);
    if (!f.mobius.empty()) ++sources, m = parse_motion("mobius:" + f.mobius);
    if (!f.reflect.empty()) ++sources, m = parse_motion("reflect:" + f.reflect);
    if (!f.preset.empty()) ++sources, m = parse_motion("preset:" + f.preset);
    if (sources > 1) throw SceneError("give at most one of --motion, --mobius, --reflect, --preset");
    return m.value_or(Mobius::identity());
}

SceneConfig scene_from(const RenderFlags& f) {
    SceneConfig c;
    c.output = f.out;
    c.format = format_from(f.format);
    const auto coloring = parse_coloring(f.coloring);
    if (!coloring) throw SceneError("unknown coloring '" + f.coloring + "'");
    c.color.coloring = *coloring;
    c.color.motion = motion_from(f);
    c.color.conjugation_omitted = f.no_conj;

    const auto domain = parse_domain_kind(f.domain);
    if (!domain) throw SceneError("unknown domain '" + f.domain + "'");
    c.domain = *domain;
    if (c.domain == DomainKind::HalfPlane) {
        c.re = {-1.0, kTwoPi + 1.0};
        c.im = {0.05, 8.0};
    }
    if (!f.re.empty()) c.re = parse_range(f.re);
    if (!f.im.empty()) c.im = parse_range(f.im);
    c.resolution = f.res;
    c.supersample = f.supersample;
    c.bands = f.bands;
    c.darken = f.darken;
    c.contour_height = family_from(f.contour_height);
    c.landscape_height = family_from(f.landscape_height);

    if (!f.surface.empty()) {
        c.surface = parse_surface_kind(f.surface);
        if (!c.surface) throw SceneError("unknown surface '" + f.surface + "'");
    }
    if (!f.theta.empty()) c.u_range = parse_range(f.theta);
    if (!f.sigma.empty()) c.v_range = parse_range(f.sigma);
    c.nu = f.nu;
    c.nv = f.nv;
    c.twist = f.twist;
    c.exaggeration = f.exaggeration;
    c.threads = f.threads;
    return c;
}

void add_render_options(CLI::App* cmd, RenderFlags& f) {
    cmd->add_option("--config", f.config, "key=value file mirroring these flags");
    cmd->add_option("-o,--out", f.out, "output file")->required();
    cmd->add_option("--format", f.format, "ppm | png | ply (default: from extension)");
    cmd->add_option("--coloring", f.coloring,
                    "complex | pseudo | disc1 | disc2 | beltrami1 | beltrami2 | klein1 | klein2");
    cmd->add_option("--motion", f.motion, "mobius:a,b,c,d | reflect:G;G | preset:NAME");
    cmd->add_option("--mobius", f.mobius, "coefficients a,b,c,d of (az+b)/(cz+d)");
    cmd->add_option("--reflect", f.reflect, "two curves: circle(c,r) or line(x), ';'-separated");
    cmd->add_option("--preset", f.preset, "named motion preset (see list-presets)");
    cmd->add_option("--domain", f.domain, "disc | halfplane | rect");
    cmd->add_option("--re", f.re, "real range lo:hi (halfplane, rect)");
    cmd->add_option("--im", f.im, "imaginary range lo:hi (halfplane, rect)");
    cmd->add_option("--res", f.res, "image width in pixels");
    cmd->add_option("--supersample", f.supersample, "stratified samples per pixel axis");
    cmd->add_option("--contour-height", f.contour_height, "draw contours of family 1 or 2");
    cmd->add_option("--bands", f.bands, "contour bands");
    cmd->add_option("--darken", f.darken, "contour darkening factor");
    cmd->add_option("--surface", f.surface,
                    "pseudosphere | dini | hemisphere | sphere | disc-landscape | plane-landscape");
    cmd->add_option("--theta,--u", f.theta, "first surface parameter range lo:hi");
    cmd->add_option("--sigma,--v", f.sigma, "second surface parameter range lo:hi");
    cmd->add_option("--nu", f.nu, "grid samples along u");
    cmd->add_option("--nv", f.nv, "grid samples along v");
    cmd->add_option("--twist", f.twist, "Dini twist per radian");
    cmd->add_option("--landscape-height", f.landscape_height, "height family 1 or 2");
    cmd->add_option("--exaggeration", f.exaggeration, "landscape height scale");
    cmd->add_flag("--no-conj", f.no_conj, "omit the conjugation step of the disc map");
    cmd->add_option("--threads", f.threads, "worker threads (0 = HYPERPHASE_THREADS or auto)");
}

void list_presets(std::ostream& out) {
    out << "motion presets:\n";
    for (const Preset& p : motion_presets()) {
        out << "  " << std::left << std::setw(28) << p.name << std::setw(16)
            << to_string(classify(p.motion)) << p.printed;
        if (p.status == FormulaStatus::DocumentedDiscrepancy) out << "  [printed formula differs]";
        out << '\n';
    }
    out << "figures:\n";
    for (const FigureInfo& f : figure_catalog()) {
        out << "  " << std::left << std::setw(16) << f.name << f.description << '\n';
    }
}

// Inserts the config file's flags right after the subcommand so later
// command-line flags override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].starts_with("--config=")) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (!path || args.empty()) return args;
    const auto extra = config_file_args(*path);
    args.insert(args.begin() + 1, extra.begin(), extra.end());
    return args;
}

}  // namespace

std::vector<std::string> config_file_args(const std::string& path) {
    std::istringstream in(detail::read_file(path));
    std::vector<std::string> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path + ":" + std::to_string(number) + ": expected key = value", 0);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value == "true") {
            out.push_back("--" + key);
        } else if (value != "false") {
            out.push_back("--" + key);
            out.push_back(value);
        }
    }
    return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperphase: phase portraits of hyperbolic motions"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    RenderFlags render_flags;
    auto* render_cmd = app.add_subcommand("render", "render one scene from flags or a config file");
    add_render_options(render_cmd, render_flags);

    std::string figure_name, figure_out, figure_format;
    std::optional<int> figure_res, figure_ss, figure_nu, figure_nv;
    int figure_threads = 0;
    auto* figure_cmd = app.add_subcommand("figure", "reproduce a figure preset");
    figure_cmd->add_option("name", figure_name, "figure name (see list-presets)")->required();
    figure_cmd->add_option("-o,--out", figure_out, "output file")->required();
    figure_cmd->add_option("--format", figure_format, "ppm | png | ply");
    figure_cmd->add_option("--res", figure_res, "image width in pixels");
    figure_cmd->add_option("--supersample", figure_ss, "stratified samples per pixel axis");
    figure_cmd->add_option("--nu", figure_nu, "mesh samples along u");
    figure_cmd->add_option("--nv", figure_nv, "mesh samples along v");
    figure_cmd->add_option("--threads", figure_threads, "worker threads");

    auto* verify_cmd = app.add_subcommand("verify", "run the numeric oracle suite");
    auto* list_cmd = app.add_subcommand("list-presets", "list motion presets and figures");

    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    std::vector<char*> argv;
    std::string program = "hyperphase";
    argv.push_back(program.data());
    for (auto& a : args) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 1;
    }

    try {
        if (*render_cmd) {
            render_scene(scene_from(render_flags));
            return 0;
        }
        if (*figure_cmd) {
            SceneConfig c = figure_scene(figure_name);
            c.output = figure_out;
            c.format = format_from(figure_format);
            if (figure_res) c.resolution = *figure_res;
            if (figure_ss) c.supersample = *figure_ss;
            if (figure_nu) c.nu = *figure_nu;
            if (figure_nv) c.nv = *figure_nv;
            c.threads = figure_threads;
            render_scene(c);
            return 0;
        }
        if (*verify_cmd) return print_verification(run_verification(), out) ? 0 : 2;
        if (*list_cmd) {
            list_presets(out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace hyperphase
