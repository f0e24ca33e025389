#pragma once

#include "hyperphase/cplx.hpp"

namespace hyperphase {

// Coordinates on the (extended, unrolled) pseudosphere: rim angle and
// distance along the tractrix generator measured from the rim.
struct PseudoCoord {
    double theta = 0.0;
    double sigma = 0.0;

    bool on_physical_surface() const { return sigma >= 0.0; }
    bool in_visible_roll() const { return theta >= 0.0 && theta < kTwoPi; }
};

// Point on the unit sphere.
struct SpherePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Inversion circle K used by the half-plane/disc correspondence.
inline const Circle kDiscInversionCircle{{0.0, -1.0}, 1.4142135623730951};

// Plane <-> Riemann sphere; infinity is the north pole (0, 0, 1).
SpherePoint stereo_to_sphere(const Complex& z);
Complex sphere_to_plane(const SpherePoint& p);

// (theta, sigma) -> theta + e^sigma i
Complex pseudo_to_halfplane(const PseudoCoord& p);
// Throws DomainError for Im z <= 0.
PseudoCoord halfplane_to_pseudo(const Complex& z);

// invert_in_circle(kDiscInversionCircle, z) with the squared radius exactly 2.
Complex invert_in_k(const Complex& z);

// Upper half-plane -> unit disc: inversion in K followed by conjugation.
// With `conjugate == false` only the inversion is applied.
Complex halfplane_to_disc(const Complex& z, bool conjugate = true);
// Disc -> upper half-plane: conjugation followed by inversion in K.
Complex disc_to_halfplane(const Complex& w, bool conjugate = true);
// Closed form of halfplane_to_disc: (iz + 1) / (z + i).
Mobius halfplane_to_disc_mobius();

// Lower stereographic projection of the disc onto the upper hemisphere.
// Throws DomainError for |w| > 1 + 1e-9.
SpherePoint disc_to_hemisphere(const Complex& w);
// Throws DomainError below the equator.
Complex hemisphere_to_disc(const SpherePoint& p);

// Vertical projection of the hemisphere onto the Klein disc.
Complex hemisphere_to_klein(const SpherePoint& p);
// Throws DomainError for |k| > 1 + 1e-9.
SpherePoint klein_to_hemisphere(const Complex& k);

Complex disc_to_klein(const Complex& w);
Complex klein_to_disc(const Complex& k);

// Pseudosphere of unit rim radius, rim at height 0, axis along +z. The
// generator is the tractrix parametrized by arclength sigma, so the ring at
// sigma has radius e^-sigma. Throws DomainError for sigma < 0.
Point3 embed_pseudosphere(const PseudoCoord& p);

// Dini's surface: the pseudosphere lifted by twist * theta along the axis,
// theta unrolled. Throws DomainError for sigma < 0.
Point3 embed_dini(const PseudoCoord& p, double twist);

// Hyperbolic length density 1 / Im z. Throws DomainError for Im z <= 0.
double metric_scale(const Complex& z);

}  // namespace hyperphase
