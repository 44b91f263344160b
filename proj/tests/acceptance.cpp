// Acceptance suite: runs the project's headline guarantees end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "elena/bijections.hpp"
#include "elena/enumerate.hpp"
#include "elena/verify.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace elena;

namespace {

std::string criterion_counts() {
    for (int length = 0; length <= 24; ++length) {
        for (Band band : {kABand, kBBand}) {
            for (int end = band.lo(); end <= band.hi(); ++end) {
                const FamilySpec spec(band, length, end);
                const Count brute = count(spec, CountMethod::BruteForce);
                const Count transfer = count(spec, CountMethod::TransferMatrix);
                const Count formula = count(spec, CountMethod::Formula);
                if (brute != transfer || transfer != formula) {
                    return spec.name() + ": brute=" + brute.str() +
                           " transfer=" + transfer.str() + " formula=" + formula.str();
                }
            }
        }
    }
    if (count(family_a(8, 0), CountMethod::Formula) != 13) return "A(8,0) != 13";
    if (count(family_b(20, 0), CountMethod::Formula) != 10946) return "B(20,0) != 10946";
    return "";
}

std::string criterion_union_identity() {
    for (int n = 0; n <= 30; ++n) {
        const UnionCounts u = union_identity_counts(n);
        if (u.lhs != u.rhs)
            return "n=" + std::to_string(n) + ": lhs=" + u.lhs.str() + " rhs=" + u.rhs.str();
    }
    return "";
}

std::string criterion_fixtures() {
    const PlaneTree glove_tree = glove_path_to_tree(parse_path(fixtures::kPath20, kABand));
    if (glove_tree.size() != 11) return "glove tree size != 11";
    if (render_tree(glove_tree) != fixtures::kTree11)
        return "glove tree mismatch: " + render_tree(glove_tree);

    const ElenaWord word = decompose_b_path(parse_path(fixtures::kBPath28, kBBand));
    if (word.text() != fixtures::kWord16) return "decomposition mismatch: " + word.text();
    if (word.size() != 16) return "word size != 16";

    const PlaneTree broom = broom_elena_to_tree(word_to_elena(word));
    if (render_tree(broom) != fixtures::kTree16)
        return "broom tree mismatch: " + render_tree(broom);
    return "";
}

std::string criterion_even_bijection() {
    for (int length = 0; length <= 20; length += 2) {
        const auto family = generate(family_b(length, 0));
        std::set<std::string> images;
        Count in_a0 = 0, in_a2 = 0;
        for (const LatticePath& b : family) {
            const TaggedPath image = composite_even(b);
            if (image.tag != 0 && image.tag != 2)
                return "bad tag for " + b.text();
            if (!family_a(length, image.tag).contains(image.path))
                return "image of " + b.text() + " not in A(" + std::to_string(length) + "," +
                       std::to_string(image.tag) + ")";
            images.insert(std::to_string(image.tag) + ":" + image.path.text());
            (image.tag == 0 ? in_a0 : in_a2) += 1;
            if (composite_even_inv(image) != b)
                return "round trip failed for " + b.text();
        }
        if (images.size() != family.size())
            return "not injective at length " + std::to_string(length);
        if (in_a0 != fib(length - 1) || in_a2 != fib(length))
            return "image sizes off at length " + std::to_string(length) + ": A0=" +
                   in_a0.str() + " A2=" + in_a2.str();
    }
    return "";
}

std::string criterion_odd_bijection() {
    for (int length = 1; length <= 19; length += 2) {
        const auto family = generate(family_b(length, -1));
        std::set<std::string> images;
        Count in_a1 = 0, in_a3 = 0;
        for (const LatticePath& b : family) {
            const TaggedPath image = composite_odd(b);
            if (image.tag != 1 && image.tag != 3)
                return "bad tag for " + b.text();
            if (!family_a(length, image.tag).contains(image.path))
                return "image of " + b.text() + " not in A(" + std::to_string(length) + "," +
                       std::to_string(image.tag) + ")";
            images.insert(std::to_string(image.tag) + ":" + image.path.text());
            (image.tag == 1 ? in_a1 : in_a3) += 1;
            if (composite_odd_inv(image) != b)
                return "round trip failed for " + b.text();

            // Augmented elements satisfy all three subclass conditions.
            auto steps = b.steps();
            steps.push_back(Step::Up);
            const LatticePath augmented(kBBand, std::move(steps));
            const ElenaTree elena = word_to_elena(decompose_b_path(augmented));
            const PlaneTree tree = broom_elena_to_tree(elena);
            const LatticePath a = glove_tree_to_path(tree);
            const bool ends_dd = a.steps()[a.steps().size() - 2] == Step::Down;
            if (!last_group_nonempty(elena) || rightmost_leaf_depth(tree) < 2 || !ends_dd)
                return "augmented " + b.text() + " misses a subclass condition";
        }
        if (images.size() != family.size())
            return "not injective at length " + std::to_string(length);
        if (in_a1 != fib(length) || in_a3 != fib(length - 1))
            return "image sizes off at length " + std::to_string(length) + ": A1=" +
                   in_a1.str() + " A3=" + in_a3.str();
    }

    // Both sides of each equivalence appear across B(2n,0); check the full
    // three-way equivalence there as well.
    for (int length = 0; length <= 20; length += 2) {
        for (const LatticePath& b : generate(family_b(length, 0))) {
            const ElenaTree elena = word_to_elena(decompose_b_path(b));
            const PlaneTree tree = broom_elena_to_tree(elena);
            const LatticePath a = glove_tree_to_path(tree);
            const bool group = last_group_nonempty(elena);
            const bool deep = rightmost_leaf_depth(tree) >= 2;
            const bool ends_dd = a.steps()[a.steps().size() - 2] == Step::Down;
            if (group != deep || deep != ends_dd)
                return "equivalence fails for " + b.text();
        }
    }
    return "";
}

std::string criterion_round_trips() {
    // Path text round trips, both bands, every end level, lengths <= 20.
    for (Band band : {kABand, kBBand}) {
        for (int length = 0; length <= 20; ++length) {
            for (int end = band.lo(); end <= band.hi(); ++end) {
                for (const LatticePath& p : generate(FamilySpec(band, length, end))) {
                    if (parse_path(p.text(), band) != p)
                        return "path text round trip failed for " + p.text();
                }
            }
        }
    }

    // Tree text round trips over every plane tree with <= 12 nodes, plus
    // glove and broom round trips on the height-restricted ones.
    for (int size = 1; size <= 12; ++size) {
        for (const PlaneTree& t : testgen::all_trees(size)) {
            if (parse_tree(render_tree(t)) != t)
                return "tree text round trip failed for " + render_tree(t);
            if (t.height() > 3) continue;
            if (glove_path_to_tree(glove_tree_to_path(t)) != t)
                return "glove round trip failed for " + render_tree(t);
            if (size >= 2 && broom_elena_to_tree(broom_tree_to_elena(t)) != t)
                return "broom round trip failed for " + render_tree(t);
        }
    }

    // Glove from the path side, lengths <= 20.
    for (int length = 0; length <= 20; length += 2) {
        for (const LatticePath& p : generate(family_a(length, 0))) {
            if (glove_tree_to_path(glove_path_to_tree(p)) != p)
                return "glove round trip failed for " + p.text();
        }
    }

    // Decompose/compose from the path side, lengths <= 20.
    for (int length = 0; length <= 20; length += 2) {
        for (const LatticePath& b : generate(family_b(length, 0))) {
            if (compose_b_path(decompose_b_path(b)) != b)
                return "decompose round trip failed for " + b.text();
        }
    }

    // Word text, word <-> elena, compose/decompose and broom from the word
    // side, sizes <= 12.
    for (std::size_t size = 2; size <= 12; ++size) {
        for (const ElenaWord& w : testgen::all_words(size)) {
            if (parse_word(w.text()) != w)
                return "word text round trip failed for " + w.text();
            const ElenaTree e = word_to_elena(w);
            if (elena_to_word(e) != w)
                return "word/elena round trip failed for " + w.text();
            if (decompose_b_path(compose_b_path(w)) != w)
                return "compose round trip failed for " + w.text();
            if (broom_tree_to_elena(broom_elena_to_tree(e)) != e)
                return "broom round trip failed for " + w.text();
        }
    }
    return "";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"1: brute-force, transfer-matrix and closed-form counts agree for all "
         "eight families up to length 24",
         criterion_counts},
        {"2: union identity lhs = rhs for n <= 30", criterion_union_identity},
        {"3: worked-example fixtures map to the exact strings", criterion_fixtures},
        {"4: even composite is a bijection B(2n,0) -> A(2n,0) + A(2n,2) for 2n <= 20",
         criterion_even_bijection},
        {"5: odd composite is a bijection B(2n-1,-1) -> A(2n-1,1) + A(2n-1,3) for "
         "2n-1 <= 19, with the three-way subclass equivalence",
         criterion_odd_bijection},
        {"6: parse/render, glove, decompose/compose, word/elena and broom round "
         "trips are identities (size <= 12, length <= 20)",
         criterion_round_trips},
    };

    int failures = 0;
    for (const auto& [title, run] : criteria) {
        const std::string detail = run();
        if (detail.empty()) {
            std::cout << "PASS criterion " << title << "\n";
        } else {
            std::cout << "FAIL criterion " << title << " -- " << detail << "\n";
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
