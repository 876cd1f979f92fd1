#pragma once

#include <string>

#include "semipath/semigroup.hpp"

namespace semipath {

/// Renders the square diagram as a g x g character grid, row 0 at the
/// bottom: '^' for up steps, '>' for right steps, '.' background. With
/// `antidiagonal`, overlays the reflection axis of the (g-1)-square with
/// '\' on background cells. Genus 0 renders as "(empty diagram)".
std::string render_square_diagram(const NumericalSemigroup& s, bool antidiagonal = false);

} // namespace semipath
