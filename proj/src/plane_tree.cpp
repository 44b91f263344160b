#include "elena/plane_tree.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace elena {

std::size_t PlaneTree::size() const {
    std::size_t n = 1;
    for (const PlaneTree& c : children_) n += c.size();
    return n;
}

int PlaneTree::height() const {
    int h = -1;
    for (const PlaneTree& c : children_) h = std::max(h, c.height());
    return h + 1;
}

PlaneTree parse_tree(const std::string& text) {
    // One frame per open node, holding the children collected so far.
    std::vector<std::vector<PlaneTree>> open;
    bool done = false;
    PlaneTree root;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (done)
            throw ParseError("trailing input at offset " + std::to_string(i) +
                             " after a complete tree");
        if (c == '(') {
            open.emplace_back();
        } else if (c == ')') {
            if (open.empty())
                throw ParseError("unbalanced ')' at offset " + std::to_string(i));
            PlaneTree node(std::move(open.back()));
            open.pop_back();
            if (open.empty()) {
                root = std::move(node);
                done = true;
            } else {
                open.back().push_back(std::move(node));
            }
        } else {
            throw ParseError(std::string("invalid character '") + c + "' at offset " +
                             std::to_string(i) + "; expected '(' or ')'");
        }
    }
    if (!done)
        throw ParseError(open.empty() ? "empty input; expected a tree"
                                      : "unbalanced input: " + std::to_string(open.size()) +
                                            " unclosed '('");
    return root;
}

std::string render_tree(const PlaneTree& tree) {
    std::string out = "(";
    for (const PlaneTree& c : tree.children()) out += render_tree(c);
    out += ")";
    return out;
}

std::ostream& operator<<(std::ostream& out, const PlaneTree& tree) {
    return out << render_tree(tree);
}

} // namespace elena
