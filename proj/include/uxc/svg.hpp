#pragma once

#include <string>

#include "uxc/document.hpp"

namespace uxc {

struct RenderOptions {
  unsigned size = 640;   // square canvas, pixels
  double radius = 1.8;   // plane radius mapped onto the disk
};

// Deterministic SVG in the disk model: the line at infinity is the boundary
// circle, finite lines are chords, points are dots (boundary dots for
// directions). Rational documents are drawn from exact coordinates converted
// to floats; prime-field documents need draw hints, since residues carry no
// real embedding. No verdict path touches this code.
std::string render_svg(const Document& doc, const RenderOptions& opt = {});

}  // namespace uxc
