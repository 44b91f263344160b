#include "elena/elena_tree.hpp"

#include <ostream>
#include <sstream>

namespace elena {

ElenaWord::ElenaWord(std::vector<ElenaToken> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.size() < 2)
        throw ParseError("an Elena word needs at least two tokens");
    if (!tokens_.front().is_a() || !tokens_.back().is_a())
        throw ParseError("an Elena word must begin and end with 'a'");
}

std::size_t ElenaWord::size() const {
    std::size_t n = 0;
    for (ElenaToken t : tokens_) n += t.is_a() ? 1 : t.path_nodes();
    return n;
}

std::string ElenaWord::text() const {
    std::string out;
    for (ElenaToken t : tokens_) {
        if (!out.empty()) out += ' ';
        out += t.text();
    }
    return out;
}

ElenaWord parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<ElenaToken> tokens;
    std::string tok;
    while (in >> tok) {
        if (tok == "a") {
            tokens.push_back(ElenaToken::a());
        } else if (tok.size() >= 2 && tok[0] == 'p') {
            int nodes = 0;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9')
                    throw ParseError("bad token '" + tok + "'");
                if (nodes > 1000000) throw ParseError("p token too large: '" + tok + "'");
                nodes = nodes * 10 + (tok[i] - '0');
            }
            if (nodes < 1) throw ParseError("bad token '" + tok + "': need k >= 1");
            tokens.push_back(ElenaToken::p(nodes));
        } else {
            throw ParseError("bad token '" + tok + "'; expected 'a' or 'p<k>'");
        }
    }
    return ElenaWord(std::move(tokens));
}

std::ostream& operator<<(std::ostream& out, const ElenaWord& word) {
    return out << word.text();
}

ElenaTree::ElenaTree(std::size_t spine, std::vector<std::vector<int>> groups)
    : groups_(std::move(groups)) {
    if (spine < 2) throw Error("an Elena needs a spine of at least two a-nodes");
    if (groups_.size() != spine - 1)
        throw Error("expected " + std::to_string(spine - 1) + " groups, got " +
                    std::to_string(groups_.size()));
    for (const auto& group : groups_)
        for (int k : group)
            if (k < 1) throw Error("hanging paths need at least one node");
}

std::size_t ElenaTree::size() const {
    std::size_t n = spine();
    for (const auto& group : groups_)
        for (int k : group) n += static_cast<std::size_t>(k);
    return n;
}

ElenaTree word_to_elena(const ElenaWord& word) {
    std::vector<std::vector<int>> groups;
    const auto& tokens = word.tokens();
    // Every "a" except the last opens a group; p tokens fill the open one.
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].is_a()) {
            if (i + 1 < tokens.size()) groups.emplace_back();
        } else {
            groups.back().push_back(tokens[i].path_nodes());
        }
    }
    const std::size_t spine = groups.size() + 1;
    return ElenaTree(spine, std::move(groups));
}

ElenaWord elena_to_word(const ElenaTree& elena) {
    std::vector<ElenaToken> tokens;
    tokens.push_back(ElenaToken::a());
    for (const auto& group : elena.groups()) {
        for (int k : group) tokens.push_back(ElenaToken::p(k));
        tokens.push_back(ElenaToken::a());
    }
    return ElenaWord(std::move(tokens));
}

} // namespace elena
