#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperphase/cplx.hpp"

namespace hyperphase {

enum class MotionKind { Rotation, Translation, LimitRotation, Identity };

std::string_view to_string(MotionKind kind);

// The direct motion z -> R_second(R_first(z)). Swap the arguments for the
// opposite order. Throws MotionError when both curves coincide.
Mobius motion_from_reflections(const GenCircle& first, const GenCircle& second);

// Classification of a motion of the upper half-plane by its normalized trace.
// Throws MotionError when no scalar multiple of the matrix is real with
// positive determinant (the map does not preserve the upper half-plane).
MotionKind classify(const Mobius& m);

// One or two fixed points; infinity is reported when c == 0.
// Throws MotionError for the identity.
std::vector<Complex> fixed_points(const Mobius& m);

enum class FormulaStatus { Matches, DocumentedDiscrepancy };

// A named motion built from a pair of reflections. `motion` is the composed
// map used for rendering; `printed` is the formula as published and
// `expected` its matrix form. When the two disagree, `corrected` holds the
// closed form obtained by composing the inversions symbolically.
struct Preset {
    std::string name;
    std::string figure;
    GenCircle first;
    GenCircle second;
    Mobius motion;
    std::string printed;
    std::optional<Mobius> expected;
    std::optional<Mobius> corrected;
    FormulaStatus status = FormulaStatus::Matches;
    std::string note;
};

const std::vector<Preset>& motion_presets();

// Throws MotionError for unknown names.
const Preset& find_preset(std::string_view name);

}  // namespace hyperphase
