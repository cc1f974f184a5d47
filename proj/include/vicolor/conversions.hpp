#pragma once

#include <vector>

#include "vicolor/coloring.hpp"
#include "vicolor/graph.hpp"

namespace vicolor {

/// Coloring of G^(3/3) (indexed like fractional_power(g,3,3)) to a
/// vi-simultaneous coloring: t-vertex v gives v, (uv)_1 gives (u,v).
/// Throws std::invalid_argument with the conflicts if `c` is improper.
ViColoring vi_from_g33(const Graph& g, const std::vector<int>& c);
std::vector<int> g33_from_vi(const Graph& g, const ViColoring& c);

/// Coloring of T_vi,1(g) (indexed like t_vi1(g)) to a (k,1)-coloring:
/// v gets the color of (v,1), every incidence (u,v) the color of (v,2).
ViColoring vi1_from_tvi1(const Graph& g, const std::vector<int>& c);
/// Inverse direction; requires spread 1. An isolated vertex v has no I_2
/// class and (v,2) gets the smallest color different from c(v).
std::vector<int> tvi1_from_vi1(const Graph& g, const ViColoring& c);

/// Colors given in elements(g) order.
ViColoring vi_from_element_colors(const Graph& g, const std::vector<int>& colors);
std::vector<int> element_colors(const Graph& g, const ViColoring& c);

}  // namespace vicolor
