#pragma once

#include <string>
#include <vector>

#include "elena/elena_tree.hpp"
#include "elena/path.hpp"
#include "elena/plane_tree.hpp"

namespace elena {

/// Schematic grid with one row per level lane, '/' and '\' step glyphs,
/// and a dashed row marking the level-0 axis.
std::string ascii_path(const std::vector<Step>& steps);
std::string ascii_path(const LatticePath& path);

/// Indented outline, one node per line.
std::string ascii_tree(const PlaneTree& tree);

/// Indented outline of the spine ('a') with its hanging paths ('o').
std::string ascii_elena(const ElenaTree& elena);

} // namespace elena
