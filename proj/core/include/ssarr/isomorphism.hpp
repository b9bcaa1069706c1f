#pragma once

#include <optional>
#include <vector>

#include "ssarr/projgeo.hpp"

namespace ssarr {

/// Searches for a bijection of line indices of `a` onto those of `b` that
/// maps the line set of every intersection point of `a` onto the line set
/// of an intersection point of `b`. result[i] is the image of line i.
///
/// Colour refinement on the line/point incidence graph prunes candidates;
/// the remaining choices are explored by individualising one line at a time.
std::optional<std::vector<int>> lattice_isomorphic(const Lattice& a, const Lattice& b);

/// True when `map` is a line bijection carrying the points of `a` onto the
/// points of `b`.
bool is_lattice_isomorphism(const Lattice& a, const Lattice& b, const std::vector<int>& map);

}  // namespace ssarr
