#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperphase/cli.hpp"
#include "hyperphase/error.hpp"
#include "hyperphase/mesh.hpp"
#include "hyperphase/motions.hpp"
#include "hyperphase/parse.hpp"
#include "hyperphase/scene.hpp"
#include "support/oracles.hpp"

using namespace hyperphase;
using oracle::cd;
using oracle::pi;

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "hyperphase_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(ParseComplex, Literals) {
    EXPECT_EQ(parse_complex("3"), cd(3, 0));
    EXPECT_EQ(parse_complex("-2.5e1"), cd(-25, 0));
    EXPECT_EQ(parse_complex("1+2i"), cd(1, 2));
    EXPECT_EQ(parse_complex("i"), cd(0, 1));
    EXPECT_EQ(parse_complex("-i"), cd(0, -1));
    EXPECT_NEAR(std::abs(parse_complex("4pi^2") - 4 * pi * pi), 0, 1e-13);
    EXPECT_NEAR(std::abs(parse_complex("2pi - pi/8") - (2 * pi - pi / 8)), 0, 1e-15);
    EXPECT_NEAR(std::abs(parse_complex("sqrt3") - std::sqrt(3.0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(parse_complex("sqrt(2)") - std::sqrt(2.0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(parse_complex("13/8") - 1.625), 0, 1e-15);
    EXPECT_NEAR(std::abs(parse_complex("(1+i)(1-i)") - 2.0), 0, 1e-15);
    EXPECT_NEAR(parse_real("15pi"), 15 * pi, 1e-13);
    EXPECT_NEAR(std::abs(parse_complex("2e") - 2 * std::exp(1.0)), 0, 1e-15);
}

TEST(ParseComplex, ErrorsCarryPosition) {
    try {
        parse_complex("1 + * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_complex(""), ParseError);
    EXPECT_THROW(parse_complex("(1+2"), ParseError);
    EXPECT_THROW(parse_complex("foo"), ParseError);
    EXPECT_THROW(parse_real("1+i"), ParseError);
}

TEST(ParseRange, Bounds) {
    const ParamRange r = parse_range("0:15pi");
    EXPECT_EQ(r.lo, 0);
    EXPECT_NEAR(r.hi, 15 * pi, 1e-13);
    const ParamRange n = parse_range("-5pi:2pi");
    EXPECT_NEAR(n.lo, -5 * pi, 1e-13);
    EXPECT_THROW(parse_range("3"), ParseError);
}

TEST(ParseMotion, Examples) {
    EXPECT_TRUE(approx_equal(parse_motion("mobius:1,-2,0,1"), Mobius(1, -2, 0, 1), 1e-15));
    EXPECT_TRUE(approx_equal(parse_motion("reflect:circle(0,sqrt3);circle(0,1)"), Mobius(1, 0, 0, 3), 1e-12));
    EXPECT_TRUE(approx_equal(parse_motion("preset:fig8-rotation"), Mobius(0, 4 * pi * pi, -1, 2 * pi), 1e-12));
    EXPECT_TRUE(approx_equal(parse_motion("reflect:line(1);line(0)"), Mobius(1, -2, 0, 1), 1e-12));
    EXPECT_TRUE(approx_equal(parse_motion("reflect: line(0) ; circle(0, 1)"),
                             motion_from_reflections(GenCircle::vertical(0), GenCircle::circle(0, 1)), 1e-12));
    EXPECT_TRUE(approx_equal(parse_motion("mobius:-261pi, 1057pi^2, -64, 8pi"),
                             Mobius(-261 * pi, 1057 * pi * pi, -64, 8 * pi), 1e-12));
    EXPECT_TRUE(approx_equal(parse_motion("mobius:1+i,0,0,1"), Mobius(cd(1, 1), 0, 0, 1), 1e-15));
}

TEST(ParseMotion, Errors) {
    EXPECT_THROW(parse_motion("mobius:1,2,2,4"), DegenerateError);
    EXPECT_THROW(parse_motion("mobius:1,2,3"), ParseError);
    EXPECT_THROW(parse_motion("preset:nope"), ParseError);
    EXPECT_THROW(parse_motion("rotate:1"), ParseError);
    EXPECT_THROW(parse_motion("reflect:circle(0,1)"), ParseError);
    EXPECT_THROW(parse_motion("reflect:circle(0,-1);circle(0,2)"), Error);
    try {
        parse_motion("mobius:1,2,x,4");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 11u);
    }
}

TEST(ParseCurve, Forms) {
    const GenCircle c = parse_curve("circle(2, 13/8)");
    ASSERT_TRUE(c.is_circle());
    EXPECT_DOUBLE_EQ(c.as_circle().radius, 1.625);
    const GenCircle l = parse_curve("line(1)");
    ASSERT_TRUE(l.is_line());
    EXPECT_NEAR(l.as_line().angle, pi / 2, 1e-15);
    const GenCircle g = parse_curve("line(i, pi/4)");
    EXPECT_NEAR(g.as_line().angle, pi / 4, 1e-15);
}

TEST(Cli, VerifyAndListing) {
    const CliResult v = cli({"verify"});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("z/3"), std::string::npos);
    EXPECT_NE(v.out.find("4z"), std::string::npos);
    EXPECT_NE(v.out.find("4pi^2/(2pi - z)"), std::string::npos);
    for (const Preset& p : motion_presets()) EXPECT_NE(v.out.find(p.name), std::string::npos) << p.name;

    const CliResult l = cli({"list-presets"});
    EXPECT_EQ(l.code, 0);
    EXPECT_NE(l.out.find("fig15-rotation"), std::string::npos);
    EXPECT_NE(l.out.find("fig9"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, 1);
    EXPECT_EQ(cli({"bogus"}).code, 1);
    EXPECT_EQ(cli({"render", "--out", scratch("x.ppm").string(), "--frobnicate"}).code, 1);
    EXPECT_EQ(cli({"render", "--out", scratch("x.ppm").string(), "--preset", "nope"}).code, 1);
    EXPECT_EQ(cli({"figure", "fig99", "--out", scratch("x.ppm").string()}).code, 1);
    EXPECT_EQ(cli({"render", "--out", scratch("x.ppm").string(), "--preset", "fig8-rotation", "--mobius", "1,0,0,3"}).code, 1);
    // 2D scene into a mesh format, and a mesh into an image format.
    EXPECT_EQ(cli({"render", "--out", scratch("x.ply").string()}).code, 1);
    EXPECT_EQ(cli({"render", "--out", scratch("x.ppm").string(), "--surface", "dini"}).code, 1);
    EXPECT_EQ(cli({"render", "--out", scratch("x.ppm").string(), "--coloring", "disc1", "--contour-height", "1"}).code, 1);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, FigureNineIsAPpmPhasePortrait) {
    const fs::path out = scratch("fig9.ppm");
    ASSERT_EQ(cli({"figure", "fig9", "--out", out.string(), "--res", "65"}).code, 0);
    const std::string bytes = slurp(out);
    ASSERT_EQ(bytes.rfind("P6 65 65 255\n", 0), 0u);
    EXPECT_EQ(bytes.size(), 13u + 65u * 65u * 3u);
    const std::string again = (cli({"figure", "fig9", "--out", out.string(), "--res", "65"}), slurp(out));
    EXPECT_EQ(bytes, again);
}

TEST(Cli, DiniTranslationHasNoBlackVertices) {
    const fs::path out = scratch("t.ply");
    ASSERT_EQ(cli({"render", "--surface", "dini", "--twist", "0.15", "--theta", "0:15pi", "--mobius", "1,0,0,9",
                   "--coloring", "pseudo", "--out", out.string(), "--nu", "300", "--nv", "40"})
                  .code,
              0);
    const Mesh m = read_ply(out);
    EXPECT_EQ(m.vertices.size(), 300u * 40u);
    for (const Rgb& c : m.colors) ASSERT_FALSE((c == Rgb{0, 0, 0}));
}

TEST(Cli, ConfigFileWithFlagOverride) {
    const fs::path cfg = scratch("scene.cfg");
    const fs::path out = scratch("cfg.ppm");
    {
        std::ofstream f(cfg);
        f << "# disc scene\n"
          << "coloring = disc2\n"
          << "preset = fig11-translation-down\n"
          << "res = 40\n\n"
          << "supersample=1\n"
          << "no-conj = false\n";
    }
    ASSERT_EQ(cli({"render", "--config", cfg.string(), "--out", out.string(), "--res", "24"}).code, 0);
    const std::string bytes = slurp(out);
    EXPECT_EQ(bytes.rfind("P6 24 24 255\n", 0), 0u);

    SceneConfig c;
    c.output = out;
    c.color.coloring = Coloring::DiscUltraparallel;
    c.color.motion = find_preset("fig11-translation-down").motion;
    c.resolution = 24;
    c.supersample = 1;
    EXPECT_EQ(render_scene_bytes(c), bytes);

    EXPECT_EQ(config_file_args(cfg.string()),
              (std::vector<std::string>{"--coloring", "disc2", "--preset", "fig11-translation-down", "--res", "40",
                                        "--supersample", "1"}));
    EXPECT_EQ(cli({"render", "--config", scratch("missing.cfg").string(), "--out", out.string()}).code, 1);
}

TEST(Cli, PngAndContours) {
    const fs::path png = scratch("c.png");
    ASSERT_EQ(cli({"render", "--out", png.string(), "--preset", "fig15-rotation", "--coloring", "disc1",
                   "--contour-height", "2", "--res", "48"})
                  .code,
              0);
    EXPECT_EQ(slurp(png).substr(1, 3), "PNG");
    const fs::path hp = scratch("hp.ppm");
    ASSERT_EQ(cli({"render", "--out", hp.string(), "--coloring", "pseudo", "--domain", "halfplane", "--re",
                   "-1:2pi+1", "--im", "0.05:8", "--res", "50", "--preset", "fig8-rotation"})
                  .code,
              0);
    EXPECT_EQ(slurp(hp).rfind("P6 50 ", 0), 0u);
}

TEST(Figures, CatalogRendersAtSmallSizes) {
    for (const FigureInfo& f : figure_catalog()) {
        SceneConfig c = figure_scene(f.name);
        c.resolution = 24;
        c.supersample = 1;
        c.nu = 16;
        c.nv = 8;
        c.output = c.surface ? "x.ply" : "x.ppm";
        EXPECT_NO_THROW(render_scene_bytes(c)) << f.name;
    }
    EXPECT_THROW(figure_scene("fig0"), SceneError);
}
