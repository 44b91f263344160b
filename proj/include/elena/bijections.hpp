#pragma once

#include "elena/elena_tree.hpp"
#include "elena/path.hpp"
#include "elena/plane_tree.hpp"

namespace elena {

/// A path together with the end level of the subfamily it belongs to. The
/// tag makes membership in a disjoint union explicit; it always equals
/// path.end_level().
struct TaggedPath {
    LatticePath path;
    int tag;

    friend bool operator==(const TaggedPath&, const TaggedPath&) = default;
};

/// Glove bijection A(2n,0) <-> plane trees of height <= 3 and size n+1.
/// Convention: reading left to right, an up-step descends into a new child
/// (children created left to right) and a down-step returns to the parent;
/// the root sits at level 0.
PlaneTree glove_path_to_tree(const LatticePath& path);
LatticePath glove_tree_to_path(const PlaneTree& tree);

/// Reads a B(2n,0) path as an Elena word of size n+2. A "UD" excursion at
/// level 0 yields an "a"; a maximal sojourn below level 0 of 2k steps
/// yields "p<k>" ("DU" for k = 1, "DD"+("UD")^(k-2)+"UU" for k >= 2); one
/// "a" is then added on each side.
ElenaWord decompose_b_path(const LatticePath& path);
LatticePath compose_b_path(const ElenaWord& word);

/// Broom transform Elena <-> plane tree of the same size, height <= 3. The
/// last a-node becomes the root, the other a-nodes its children in spine
/// order (first a-node leftmost), and each hanging path of k nodes becomes
/// a child of its a-node carrying k-1 leaves, groups kept in order.
PlaneTree broom_elena_to_tree(const ElenaTree& elena);
ElenaTree broom_tree_to_elena(const PlaneTree& tree);

/// Case split on the last two steps of an A(2n+2,0) path, which are "UD"
/// or "DD": the 2n-step prefix lands in A(2n,0) or A(2n,2) respectively.
/// join_last_two re-appends the matching pair.
TaggedPath split_last_two(const LatticePath& path);
LatticePath join_last_two(const TaggedPath& tagged);

/// B(2n,0) -> A(2n,0) + A(2n,2): decompose, reshape through the Elena and
/// the broom tree, walk the glove back to a path, split the last two steps.
TaggedPath composite_even(const LatticePath& b);
LatticePath composite_even_inv(const TaggedPath& tagged);

/// B(2n-1,-1) -> A(2n-1,1) + A(2n-1,3): append an up-step, run the even
/// pipeline to A(2n+2,0) (which then necessarily ends "DD"), strip that
/// "DD" to land in A(2n,2), and strip one more step; an up-step there tags
/// the image 1, a down-step tags it 3.
TaggedPath composite_odd(const LatticePath& b);
LatticePath composite_odd_inv(const TaggedPath& tagged);

/// True iff the group hanging off the next-to-last a-node has an entry.
bool last_group_nonempty(const ElenaTree& elena);

/// Depth of the leaf reached by always taking the last child.
int rightmost_leaf_depth(const PlaneTree& tree);

} // namespace elena
