#pragma once

// Test-side object generators, kept independent of the library's own
// enumeration so they can serve as oracles.

#include <cstdint>
#include <string>
#include <vector>

#include "elena/elena_tree.hpp"
#include "elena/path.hpp"
#include "elena/plane_tree.hpp"

namespace testgen {

// Every band-legal step sequence of the given length and end level, by
// trying all 2^length words. Decoding MSB-first with 0 = U makes the
// output lexicographic with U before D.
inline std::vector<std::string> naive_family(elena::Band band, int length, int end) {
    std::vector<std::string> out;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << length); ++word) {
        int level = 0;
        bool ok = true;
        std::string text;
        for (int j = 0; j < length && ok; ++j) {
            const bool up = ((word >> (length - 1 - j)) & 1) == 0;
            level += up ? 1 : -1;
            ok = level >= band.lo() && level <= band.hi();
            text += up ? 'U' : 'D';
        }
        if (ok && level == end) out.push_back(text);
    }
    return out;
}

// All plane trees with exactly `size` nodes, by first-subtree decomposition.
inline std::vector<elena::PlaneTree> all_trees(int size) {
    if (size <= 1) return {elena::PlaneTree{}};
    std::vector<elena::PlaneTree> out;
    for (int first = 1; first < size; ++first) {
        for (const elena::PlaneTree& head : all_trees(first)) {
            for (const elena::PlaneTree& rest : all_trees(size - first)) {
                std::vector<elena::PlaneTree> children;
                children.push_back(head);
                for (const elena::PlaneTree& c : rest.children()) children.push_back(c);
                out.emplace_back(std::move(children));
            }
        }
    }
    return out;
}

namespace detail {

template <typename Emit>
void interior_tokens(std::size_t budget, std::vector<elena::ElenaToken>& cur, Emit&& emit) {
    if (budget == 0) {
        emit(cur);
        return;
    }
    cur.push_back(elena::ElenaToken::a());
    interior_tokens(budget - 1, cur, emit);
    cur.pop_back();
    for (std::size_t k = 1; k <= budget; ++k) {
        cur.push_back(elena::ElenaToken::p(static_cast<int>(k)));
        interior_tokens(budget - k, cur, emit);
        cur.pop_back();
    }
}

} // namespace detail

// All Elena words of exactly `size` nodes (size >= 2).
inline std::vector<elena::ElenaWord> all_words(std::size_t size) {
    std::vector<elena::ElenaWord> out;
    std::vector<elena::ElenaToken> cur;
    detail::interior_tokens(size - 2, cur, [&](const std::vector<elena::ElenaToken>& interior) {
        std::vector<elena::ElenaToken> tokens;
        tokens.push_back(elena::ElenaToken::a());
        for (elena::ElenaToken t : interior) tokens.push_back(t);
        tokens.push_back(elena::ElenaToken::a());
        out.emplace_back(std::move(tokens));
    });
    return out;
}

} // namespace testgen
