#pragma once

#include <iosfwd>

#include "inconic/scene.hpp"

namespace inconic {

/// Renders figure scene.figure_id (1..7) as a standalone SVG 1.1 document.
/// All geometry comes from the exact layer; coordinates become floats only
/// at emission. Output is deterministic for fixed inputs.
void render_figure(const SceneSpec& scene, std::ostream& os);

}  // namespace inconic
