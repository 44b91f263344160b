#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "elena/errors.hpp"

namespace elena {

/// Rooted tree with ordered children. A default-constructed tree is a
/// single node.
class PlaneTree {
public:
    PlaneTree() = default;
    explicit PlaneTree(std::vector<PlaneTree> children) : children_(std::move(children)) {}

    const std::vector<PlaneTree>& children() const { return children_; }
    bool is_leaf() const { return children_.empty(); }

    /// Node count, >= 1.
    std::size_t size() const;

    /// Edges on a longest root-to-leaf path; 0 for a single node.
    int height() const;

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

private:
    std::vector<PlaneTree> children_;
};

/// Balanced-parentheses form: each node is "(" + children + ")", so the
/// node count equals the number of '('. Whitespace is ignored.
PlaneTree parse_tree(const std::string& text);
std::string render_tree(const PlaneTree& tree);

std::ostream& operator<<(std::ostream& out, const PlaneTree& tree);

} // namespace elena
