#pragma once

#include <fusscat/dissections.hpp>
#include <fusscat/shi_tableau.hpp>

#include <string>

namespace fusscat::cli {

/// Young diagram of p inside the staircase (mn, m(n-1), ..., m).
std::string render_svg(const StaircasePartition& p);

/// Staircase of boxes; box (i, n-j+1) shows k_{i,j} when nonzero.
std::string render_svg(const ShiTableau& t);

/// Labeled polygon with the dissection's diagonals; snake diagonals drawn in red.
std::string render_svg(const Dissection& d);

/// Labeled polygon with its snake dashed.
std::string render_svg(const LabeledPolygon& poly);

}  // namespace fusscat::cli
