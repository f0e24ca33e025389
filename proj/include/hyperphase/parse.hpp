#pragma once

#include <complex>
#include <string_view>

#include "hyperphase/cplx.hpp"
#include "hyperphase/mesh.hpp"

namespace hyperphase {

// Complex arithmetic expression: + - * / ^, parentheses, implicit
// multiplication ("4pi", "2i"), and the tokens i, pi, e, sqrt2, sqrt3,
// sqrt(...). Throws ParseError with the offending position.
std::complex<double> parse_complex(std::string_view text);

// As parse_complex, but the value must be real.
double parse_real(std::string_view text);

// "lo:hi", e.g. "0:15pi". Bounds need not be ordered here.
ParamRange parse_range(std::string_view text);

// Curve: circle(c, r) | line(x) (vertical line Re z = x) | line(base, angle).
GenCircle parse_curve(std::string_view text);

// Motion grammar:
//   mobius:a,b,c,d
//   reflect:<curve>;<curve>     (first curve is reflected in first)
//   preset:<name>
// Throws ParseError, or DegenerateError for a singular matrix.
Mobius parse_motion(std::string_view text);

}  // namespace hyperphase
