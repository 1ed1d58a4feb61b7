#pragma once

#include <string>

#include "vantage/constructions.hpp"
#include "vantage/geometry.hpp"

namespace vantage {

/// Fixed 600x600 viewport; output depends only on the inputs.
struct SvgStyle {
  int size = 600;
  int margin = 40;
};

/// Points of a planar set, labelled by index. Throws PreconditionError unless dim == 2 and non-empty.
std::string svg_point_set(const CandidateSet& candidates, const SvgStyle& style = {});

/// The triangle with its three midpoint-direction companions, outer points filled, inner hollow.
std::string svg_six_point(const SvgStyle& style = {});

/// Bisector lines of a planar set with each arrangement cell shaded by a distinct hue.
std::string svg_bisector_arrangement(const CandidateSet& candidates, const SvgStyle& style = {});

/// The three parts of a flanked layout on a sign-preserving log scale, x -> sgn(x) log10(1 + |x|).
/// Accepts dim 1 (drawn on a line) or 2.
std::string svg_flanked(const FlankedLayout& layout, const VantageMultiset& vantage, const SvgStyle& style = {});

}  // namespace vantage
