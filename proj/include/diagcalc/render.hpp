#pragma once

#include <string>
#include <string_view>

#include "diagcalc/partition.hpp"

namespace diagcalc {

/// Layout constants for diagram drawings. Any change here changes the bytes
/// of every drawing, so bump version with it.
struct DiagramLayout {
  static constexpr std::string_view version = "diagcalc-svg/1";
  static constexpr int spacing = 40;     // distance between neighbouring vertices
  static constexpr int row_gap = 40;     // vertical distance between the rows
  static constexpr int margin = 20;
  static constexpr int radius = 4;
  static constexpr int arc_rise = 6;     // arc depth per unit of horizontal span
  static constexpr int arc_rise_max = 16;
};

/// Two-row drawing: upper vertices 1..n left to right, lower vertices
/// 1'..n' below them, consecutive vertices of a block in one row joined by
/// an arc bending into the diagram, and one straight edge per transversal
/// from its leftmost upper to its leftmost lower vertex.
std::string render_svg(const Partition& a);

}  // namespace diagcalc
