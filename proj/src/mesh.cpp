#include "hyperphase/mesh.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hyperphase/error.hpp"
#include "hyperphase/parallel.hpp"
#include "io_util.hpp"

namespace hyperphase {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Point3 spherical(double azimuth, double polar) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
            std::cos(polar)};
}

Point3 surface_position(const Surface& surface, double u, double v) {
    return std::visit(
        Overloaded{
            [&](const PseudosphereSurface&) { return embed_pseudosphere({u, v}); },
            [&](const DiniSurface& s) { return embed_dini({u, v}, s.twist); },
            [&](const HemisphereSurface&) { return spherical(u, v); },
            [&](const SphereSurface&) { return spherical(u, v); },
            [&](const DiscLandscapeSurface& s) {
                const std::complex<double> w = std::polar(v, u);
                return Point3{w.real(), w.imag(), s.exaggeration * s.height(Complex(w))};
            },
            [&](const PlaneLandscapeSurface& s) {
                return Point3{u, v, s.scale * s.height(Complex(u, v))};
            },
        },
        surface);
}

bool periodic_in_u(const Surface& surface) {
    return !std::holds_alternative<DiniSurface>(surface) &&
           !std::holds_alternative<PlaneLandscapeSurface>(surface);
}

void validate(const Surface& surface, ParamRange u, ParamRange v, int nu, int nv) {
    if (nu < 2 || nv < 2) throw SceneError("tessellation needs nu, nv >= 2");
    for (const ParamRange& r : {u, v}) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi)) {
            throw SceneError("parameter ranges must be finite with lo < hi");
        }
    }
    const double eps = 1e-12;
    std::visit(Overloaded{
                   [&](const PseudosphereSurface&) {
                       if (v.lo < 0.0) throw SceneError("pseudosphere needs sigma >= 0");
                   },
                   [&](const DiniSurface&) {
                       if (v.lo < 0.0) throw SceneError("Dini's surface needs sigma >= 0");
                   },
                   [&](const HemisphereSurface&) {
                       if (v.lo < -eps || v.hi > kPi / 2 + eps) {
                           throw SceneError("hemisphere polar angle must lie in [0, pi/2]");
                       }
                   },
                   [&](const SphereSurface&) {
                       if (v.lo < -eps || v.hi > kPi + eps) {
                           throw SceneError("sphere polar angle must lie in [0, pi]");
                       }
                   },
                   [&](const DiscLandscapeSurface& s) {
                       if (v.lo < 0.0 || v.hi > 1.0) {
                           throw SceneError("disc landscape radius must lie in [0, 1]");
                       }
                       if (!s.height) throw SceneError("disc landscape needs a height function");
                   },
                   [&](const PlaneLandscapeSurface& s) {
                       if (!s.height) throw SceneError("plane landscape needs a height function");
                   },
               },
               surface);
}

double distance(const Point3& a, const Point3& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double triangle_area(const Point3& a, const Point3& b, const Point3& c) {
    const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    return 0.5 * std::hypot(uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx);
}

}  // namespace

ParamRange default_u_range(const Surface& surface) {
    return std::visit(Overloaded{
                          [](const DiniSurface&) { return ParamRange{0.0, 7 * kPi}; },
                          [](const PlaneLandscapeSurface&) { return ParamRange{-2.0, 2.0}; },
                          [](const auto&) { return ParamRange{0.0, kTwoPi}; },
                      },
                      surface);
}

ParamRange default_v_range(const Surface& surface) {
    return std::visit(Overloaded{
                          [](const PseudosphereSurface&) { return ParamRange{0.0, 3.0}; },
                          [](const DiniSurface&) { return ParamRange{0.0, 3.0}; },
                          [](const HemisphereSurface&) { return ParamRange{0.0, kPi / 2}; },
                          [](const SphereSurface&) { return ParamRange{0.0, kPi}; },
                          [](const DiscLandscapeSurface&) { return ParamRange{0.0, 0.995}; },
                          [](const PlaneLandscapeSurface&) { return ParamRange{-2.0, 2.0}; },
                      },
                      surface);
}

Mesh tessellate(const Surface& surface, ParamRange u, ParamRange v, int nu, int nv) {
    validate(surface, u, v, nu, nv);
    const bool weld = periodic_in_u(surface) && std::abs(u.hi - u.lo - kTwoPi) <= 1e-12;
    const int columns = weld ? nu - 1 : nu;

    auto u_at = [&](int i) { return u.lo + (u.hi - u.lo) * i / (nu - 1); };
    auto v_at = [&](int j) { return v.lo + (v.hi - v.lo) * j / (nv - 1); };

    Mesh mesh;
    std::vector<std::uint32_t> index(static_cast<std::size_t>(nu) * nv);
    for (int j = 0; j < nv; ++j) {
        const double vj = v_at(j);
        std::vector<Point3> row(columns);
        for (int i = 0; i < columns; ++i) row[i] = surface_position(surface, u_at(i), vj);
        bool collapsed = true;
        for (const Point3& p : row) {
            if (distance(p, row.front()) > 1e-12) {
                collapsed = false;
                break;
            }
        }
        const auto first = static_cast<std::uint32_t>(mesh.vertices.size());
        const int stored = collapsed ? 1 : columns;
        for (int i = 0; i < stored; ++i) {
            mesh.vertices.push_back(row[i]);
            mesh.params.push_back({u_at(i), vj});
        }
        for (int i = 0; i < nu; ++i) {
            const int column = i % columns;
            index[static_cast<std::size_t>(j) * nu + i] =
                first + static_cast<std::uint32_t>(collapsed ? 0 : column);
        }
    }

    auto id = [&](int i, int j) { return index[static_cast<std::size_t>(j) * nu + i]; };
    auto emit = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (a == b || b == c || a == c) return;
        if (triangle_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]) <= 1e-14) return;
        mesh.faces.push_back({a, b, c});
    };
    for (int j = 0; j + 1 < nv; ++j) {
        for (int i = 0; i + 1 < nu; ++i) {
            emit(id(i, j), id(i + 1, j), id(i + 1, j + 1));
            emit(id(i, j), id(i + 1, j + 1), id(i, j + 1));
        }
    }
    mesh.colors.assign(mesh.vertices.size(), Rgb{255, 255, 255});
    return mesh;
}

SurfaceChart surface_chart(const Surface& surface) {
    return std::visit(
        Overloaded{
            [](const PseudosphereSurface&) -> SurfaceChart {
                return [](double u, double v) {
                    return std::pair{pseudo_to_halfplane({u, v}), Chart::HalfPlane};
                };
            },
            [](const DiniSurface&) -> SurfaceChart {
                return [](double u, double v) {
                    return std::pair{pseudo_to_halfplane({u, v}), Chart::HalfPlane};
                };
            },
            [](const HemisphereSurface&) -> SurfaceChart {
                return [](double u, double v) {
                    const Point3 p = spherical(u, v);
                    return std::pair{hemisphere_to_disc({p.x, p.y, p.z}), Chart::Disc};
                };
            },
            [](const SphereSurface&) -> SurfaceChart {
                return [](double u, double v) {
                    const Point3 p = spherical(u, v);
                    return std::pair{sphere_to_plane({p.x, p.y, p.z}), Chart::Plane};
                };
            },
            [](const DiscLandscapeSurface&) -> SurfaceChart {
                return [](double u, double v) {
                    return std::pair{Complex(std::polar(v, u)), Chart::Disc};
                };
            },
            [](const PlaneLandscapeSurface&) -> SurfaceChart {
                return [](double u, double v) { return std::pair{Complex(u, v), Chart::Plane}; };
            },
        },
        surface);
}

Mesh colorize(Mesh mesh, const ColorSpec& spec, const SurfaceChart& chart, int threads) {
    mesh.colors.resize(mesh.vertices.size());
    const int n = static_cast<int>(mesh.vertices.size());
    constexpr int kBlock = 1024;
    const int blocks = (n + kBlock - 1) / kBlock;
    parallel_for(blocks, resolve_threads(threads), [&](int b) {
        const int end = std::min(n, (b + 1) * kBlock);
        for (int k = b * kBlock; k < end; ++k) {
            const auto [u, v] = mesh.params[k];
            const auto [point, which] = chart(u, v);
            mesh.colors[k] = hue_to_rgb(evaluate(spec, point, which));
        }
    });
    return mesh;
}

namespace {

void append_number(std::string& out, double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 7);
    out.append(buf, res.ptr);
}

void append_number(std::string& out, unsigned value) {
    char buf[16];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, res.ptr);
}

}  // namespace

std::string encode_ply(const Mesh& mesh) {
    if (mesh.colors.size() != mesh.vertices.size()) {
        throw SceneError("mesh colors must parallel its vertices");
    }
    std::string out;
    out.reserve(mesh.vertices.size() * 48 + mesh.faces.size() * 24 + 256);
    out += "ply\nformat ascii 1.0\n";
    out += "element vertex " + std::to_string(mesh.vertices.size()) + "\n";
    out += "property float x\nproperty float y\nproperty float z\n";
    out += "property uchar red\nproperty uchar green\nproperty uchar blue\n";
    out += "element face " + std::to_string(mesh.faces.size()) + "\n";
    out += "property list uchar int vertex_indices\nend_header\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Point3& p = mesh.vertices[i];
        const Rgb& c = mesh.colors[i];
        append_number(out, p.x);
        out += ' ';
        append_number(out, p.y);
        out += ' ';
        append_number(out, p.z);
        for (unsigned ch : {unsigned{c.r}, unsigned{c.g}, unsigned{c.b}}) {
            out += ' ';
            append_number(out, ch);
        }
        out += '\n';
    }
    for (const auto& f : mesh.faces) {
        out += '3';
        for (std::uint32_t idx : f) {
            out += ' ';
            append_number(out, unsigned{idx});
        }
        out += '\n';
    }
    return out;
}

void write_ply(const Mesh& mesh, const std::filesystem::path& path) {
    detail::write_file(path, encode_ply(mesh));
}

Mesh parse_ply(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "ply") throw IoError("not a PLY file");
    std::size_t vertex_count = 0, face_count = 0;
    bool ascii = false;
    while (std::getline(in, line) && line != "end_header") {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "format") {
            std::string kind;
            ls >> kind;
            ascii = kind == "ascii";
        } else if (word == "element") {
            std::string name;
            std::size_t count = 0;
            ls >> name >> count;
            if (name == "vertex") vertex_count = count;
            if (name == "face") face_count = count;
        }
    }
    if (!ascii) throw IoError("only ASCII PLY is supported");

    Mesh mesh;
    mesh.vertices.resize(vertex_count);
    mesh.colors.resize(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) {
        unsigned r = 0, g = 0, b = 0;
        Point3& p = mesh.vertices[i];
        if (!(in >> p.x >> p.y >> p.z >> r >> g >> b)) throw IoError("truncated vertex list");
        mesh.colors[i] = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                          static_cast<std::uint8_t>(b)};
    }
    mesh.faces.resize(face_count);
    for (std::size_t i = 0; i < face_count; ++i) {
        unsigned n = 0;
        auto& f = mesh.faces[i];
        if (!(in >> n >> f[0] >> f[1] >> f[2]) || n != 3) throw IoError("bad face record");
    }
    return mesh;
}

Mesh read_ply(const std::filesystem::path& path) { return parse_ply(detail::read_file(path)); }

}  // namespace hyperphase
