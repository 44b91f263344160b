#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "elena/errors.hpp"

namespace elena {

/// Symbol of an Elena word: the spine marker "a", or "p<k>" for a hanging
/// path of k >= 1 nodes.
class ElenaToken {
public:
    static ElenaToken a() { return ElenaToken(0); }
    static ElenaToken p(int nodes) {
        if (nodes < 1) throw Error("p token needs at least one node");
        return ElenaToken(nodes);
    }

    bool is_a() const { return nodes_ == 0; }
    bool is_p() const { return nodes_ > 0; }

    /// Nodes in the hanging path; 0 for an "a" token.
    int path_nodes() const { return nodes_; }

    std::string text() const { return is_a() ? "a" : "p" + std::to_string(nodes_); }

    friend bool operator==(ElenaToken, ElenaToken) = default;

private:
    explicit ElenaToken(int nodes) : nodes_(nodes) {}
    int nodes_;
};

/// Token form of an Elena: a word over {a, p<k>} that begins and ends with
/// "a" and has at least two tokens (the one-node Elena is excluded).
class ElenaWord {
public:
    explicit ElenaWord(std::vector<ElenaToken> tokens);

    const std::vector<ElenaToken>& tokens() const { return tokens_; }

    /// Number of nodes described: a-count plus the sum of all p sizes.
    std::size_t size() const;

    std::string text() const;

    friend bool operator==(const ElenaWord&, const ElenaWord&) = default;

private:
    std::vector<ElenaToken> tokens_;
};

/// Whitespace-separated tokens "a" and "p<k>".
ElenaWord parse_word(const std::string& text);

std::ostream& operator<<(std::ostream& out, const ElenaWord& word);

/// Structured form of an Elena: a spine of m >= 2 a-nodes, with an ordered
/// group of hanging path lengths attached to every a-node except the last.
class ElenaTree {
public:
    ElenaTree(std::size_t spine, std::vector<std::vector<int>> groups);

    /// Number of a-nodes, m >= 2.
    std::size_t spine() const { return groups_.size() + 1; }

    /// spine()-1 groups; group i hangs off the i-th a-node.
    const std::vector<std::vector<int>>& groups() const { return groups_; }

    /// Total node count: spine plus all hanging path nodes.
    std::size_t size() const;

    friend bool operator==(const ElenaTree&, const ElenaTree&) = default;

private:
    std::vector<std::vector<int>> groups_;
};

/// Mutually inverse changes of representation; both preserve size().
ElenaTree word_to_elena(const ElenaWord& word);
ElenaWord elena_to_word(const ElenaTree& elena);

} // namespace elena
