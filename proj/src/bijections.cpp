#include "elena/bijections.hpp"

namespace elena {

namespace {

void require_family(const LatticePath& path, Band band, bool even, int end, const char* who) {
    const bool parity_ok = (path.length() % 2 == 0) == even;
    if (path.band() != band || !parity_ok || path.end_level() != end)
        throw NotInFamily(std::string(who) + ": path '" + path.text() + "' is not in " +
                          (band == kABand ? "A" : "B") + "(" + (even ? "2n" : "2n-1") + "," +
                          std::to_string(end) + ")");
}

void preorder_steps(const PlaneTree& tree, std::vector<Step>& out) {
    for (const PlaneTree& child : tree.children()) {
        out.push_back(Step::Up);
        preorder_steps(child, out);
        out.push_back(Step::Down);
    }
}

} // namespace

PlaneTree glove_path_to_tree(const LatticePath& path) {
    require_family(path, kABand, true, 0, "glove");
    // One frame per currently open node; the band keeps the depth <= 3.
    std::vector<std::vector<PlaneTree>> open(1);
    for (Step s : path.steps()) {
        if (s == Step::Up) {
            open.emplace_back();
        } else {
            PlaneTree node(std::move(open.back()));
            open.pop_back();
            open.back().push_back(std::move(node));
        }
    }
    return PlaneTree(std::move(open.front()));
}

LatticePath glove_tree_to_path(const PlaneTree& tree) {
    if (tree.height() > 3)
        throw TooTall("glove: tree of height " + std::to_string(tree.height()) +
                      " leaves the band");
    std::vector<Step> steps;
    steps.reserve(2 * (tree.size() - 1));
    preorder_steps(tree, steps);
    return LatticePath(kABand, std::move(steps));
}

ElenaWord decompose_b_path(const LatticePath& path) {
    require_family(path, kBBand, true, 0, "decompose");
    std::vector<ElenaToken> tokens;
    tokens.push_back(ElenaToken::a());
    const auto& steps = path.steps();
    std::size_t i = 0;
    while (i < steps.size()) {
        if (steps[i] == Step::Up) {
            // Excursion to level 1; the band forces an immediate return.
            tokens.push_back(ElenaToken::a());
            i += 2;
        } else {
            // Sojourn below level 0 up to the first return; 2k steps <-> p<k>.
            std::size_t j = i;
            int level = 0;
            do {
                level += level_change(steps[j]);
                ++j;
            } while (level != 0);
            tokens.push_back(ElenaToken::p(static_cast<int>((j - i) / 2)));
            i = j;
        }
    }
    tokens.push_back(ElenaToken::a());
    return ElenaWord(std::move(tokens));
}

LatticePath compose_b_path(const ElenaWord& word) {
    std::vector<Step> steps;
    const auto& tokens = word.tokens();
    // The outer a's carry no steps.
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
        if (tokens[i].is_a()) {
            steps.push_back(Step::Up);
            steps.push_back(Step::Down);
        } else if (tokens[i].path_nodes() == 1) {
            steps.push_back(Step::Down);
            steps.push_back(Step::Up);
        } else {
            steps.push_back(Step::Down);
            steps.push_back(Step::Down);
            for (int r = 0; r < tokens[i].path_nodes() - 2; ++r) {
                steps.push_back(Step::Up);
                steps.push_back(Step::Down);
            }
            steps.push_back(Step::Up);
            steps.push_back(Step::Up);
        }
    }
    return LatticePath(kBBand, std::move(steps));
}

PlaneTree broom_elena_to_tree(const ElenaTree& elena) {
    std::vector<PlaneTree> spine_nodes;
    spine_nodes.reserve(elena.groups().size());
    for (const auto& group : elena.groups()) {
        std::vector<PlaneTree> brooms;
        brooms.reserve(group.size());
        for (int k : group)
            brooms.emplace_back(std::vector<PlaneTree>(static_cast<std::size_t>(k) - 1));
        spine_nodes.emplace_back(std::move(brooms));
    }
    return PlaneTree(std::move(spine_nodes));
}

ElenaTree broom_tree_to_elena(const PlaneTree& tree) {
    if (tree.size() < 2) throw SingleNode("the one-node tree has no Elena counterpart");
    if (tree.height() > 3)
        throw TooTall("tree of height " + std::to_string(tree.height()) +
                      " is not a broom image");
    std::vector<std::vector<int>> groups;
    groups.reserve(tree.children().size());
    for (const PlaneTree& spine_node : tree.children()) {
        std::vector<int> group;
        group.reserve(spine_node.children().size());
        // height <= 3 makes every grandchild's child a leaf, so the child
        // count alone recovers the hanging path.
        for (const PlaneTree& broom : spine_node.children())
            group.push_back(static_cast<int>(broom.children().size()) + 1);
        groups.push_back(std::move(group));
    }
    const std::size_t spine = groups.size() + 1;
    return ElenaTree(spine, std::move(groups));
}

TaggedPath split_last_two(const LatticePath& path) {
    require_family(path, kABand, true, 0, "split");
    if (path.length() < 2)
        throw NotInFamily("split: the empty path has no last two steps");
    auto steps = path.steps();
    // The path ends at 0 inside [0,3], so the last step is a down-step and
    // the one before decides the case.
    const bool from_zero = steps[steps.size() - 2] == Step::Up;
    steps.resize(steps.size() - 2);
    return {LatticePath(kABand, std::move(steps)), from_zero ? 0 : 2};
}

LatticePath join_last_two(const TaggedPath& tagged) {
    if (tagged.tag != 0 && tagged.tag != 2)
        throw NotInFamily("join: tag must be 0 or 2, got " + std::to_string(tagged.tag));
    require_family(tagged.path, kABand, true, tagged.tag, "join");
    auto steps = tagged.path.steps();
    steps.push_back(tagged.tag == 0 ? Step::Up : Step::Down);
    steps.push_back(Step::Down);
    return LatticePath(kABand, std::move(steps));
}

TaggedPath composite_even(const LatticePath& b) {
    const ElenaWord word = decompose_b_path(b);
    const PlaneTree tree = broom_elena_to_tree(word_to_elena(word));
    return split_last_two(glove_tree_to_path(tree));
}

LatticePath composite_even_inv(const TaggedPath& tagged) {
    const PlaneTree tree = glove_path_to_tree(join_last_two(tagged));
    const ElenaWord word = elena_to_word(broom_tree_to_elena(tree));
    return compose_b_path(word);
}

TaggedPath composite_odd(const LatticePath& b) {
    require_family(b, kBBand, false, -1, "odd composite");
    auto steps = b.steps();
    steps.push_back(Step::Up);
    const LatticePath augmented(kBBand, std::move(steps));
    // The appended up-step makes the last group non-empty, so the even
    // pipeline's image ends "DD".
    const ElenaWord word = decompose_b_path(augmented);
    const PlaneTree tree = broom_elena_to_tree(word_to_elena(word));
    const LatticePath a = glove_tree_to_path(tree);
    auto a_steps = a.steps();
    const std::size_t len = a_steps.size();
    if (a_steps[len - 1] != Step::Down || a_steps[len - 2] != Step::Down)
        throw InternalError("odd composite: image of '" + b.text() + "' does not end DD");
    // Strip "DD" to reach A(2n,2), then one more step decides the subfamily.
    const bool ends_up = a_steps[len - 3] == Step::Up;
    a_steps.resize(len - 3);
    return {LatticePath(kABand, std::move(a_steps)), ends_up ? 1 : 3};
}

LatticePath composite_odd_inv(const TaggedPath& tagged) {
    if (tagged.tag != 1 && tagged.tag != 3)
        throw NotInFamily("odd composite inverse: tag must be 1 or 3, got " +
                          std::to_string(tagged.tag));
    require_family(tagged.path, kABand, false, tagged.tag, "odd composite inverse");
    auto steps = tagged.path.steps();
    steps.push_back(tagged.tag == 1 ? Step::Up : Step::Down);  // -> A(2n,2)
    steps.push_back(Step::Down);
    steps.push_back(Step::Down);  // -> A(2n+2,0)
    const LatticePath a(kABand, std::move(steps));
    const ElenaTree elena = broom_tree_to_elena(glove_path_to_tree(a));
    const LatticePath b = compose_b_path(elena_to_word(elena));
    auto b_steps = b.steps();
    if (b_steps.empty() || b_steps.back() != Step::Up)
        throw InternalError("odd composite inverse: B image of '" + tagged.path.text() +
                            "' does not end with an up-step");
    b_steps.pop_back();
    return LatticePath(kBBand, std::move(b_steps));
}

bool last_group_nonempty(const ElenaTree& elena) {
    return !elena.groups().back().empty();
}

int rightmost_leaf_depth(const PlaneTree& tree) {
    int depth = 0;
    const PlaneTree* node = &tree;
    while (!node->is_leaf()) {
        node = &node->children().back();
        ++depth;
    }
    return depth;
}

} // namespace elena
