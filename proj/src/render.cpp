#include "elena/render.hpp"

#include <algorithm>

namespace elena {

namespace {

void trim_right(std::string& row) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
}

void outline_tree(const PlaneTree& tree, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    out += "*\n";
    for (const PlaneTree& child : tree.children()) outline_tree(child, depth + 1, out);
}

} // namespace

std::string ascii_path(const std::vector<Step>& steps) {
    std::vector<int> levels{0};
    levels.reserve(steps.size() + 1);
    for (Step s : steps) levels.push_back(levels.back() + level_change(s));
    const int max_level = *std::max_element(levels.begin(), levels.end());
    const int min_level = *std::min_element(levels.begin(), levels.end());

    std::string out;
    const std::string axis(steps.size(), '-');
    // Lane `lane` is the strip between levels lane-1 and lane; the axis row
    // sits between lane 1 and lane 0.
    for (int lane = max_level; lane >= min_level + 1; --lane) {
        if (lane == 0) out += axis + '\n';
        std::string row(steps.size(), ' ');
        for (std::size_t j = 0; j < steps.size(); ++j) {
            if (steps[j] == Step::Up && levels[j] == lane - 1) row[j] = '/';
            if (steps[j] == Step::Down && levels[j] == lane) row[j] = '\\';
        }
        trim_right(row);
        out += row + '\n';
    }
    if (min_level >= 0) out += axis + '\n';
    return out;
}

std::string ascii_path(const LatticePath& path) {
    return ascii_path(path.steps());
}

std::string ascii_tree(const PlaneTree& tree) {
    std::string out;
    outline_tree(tree, 0, out);
    return out;
}

std::string ascii_elena(const ElenaTree& elena) {
    std::string out;
    const auto& groups = elena.groups();
    for (std::size_t i = 0; i < elena.spine(); ++i) {
        out.append(2 * i, ' ');
        out += "a\n";
        if (i >= groups.size()) continue;
        for (int k : groups[i]) {
            // Hanging path of k nodes, drawn as a chain.
            for (int node = 0; node < k; ++node) {
                out.append(2 * (i + 1 + static_cast<std::size_t>(node)), ' ');
                out += "o\n";
            }
        }
    }
    return out;
}

} // namespace elena
