#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "elena/bijections.hpp"
#include "elena/enumerate.hpp"
#include "elena/render.hpp"
#include "elena/verify.hpp"

namespace {

using namespace elena;

Band band_from_flag(const std::string& family) {
    return family == "A" ? kABand : kBBand;
}

CountMethod method_from_flag(const std::string& method) {
    if (method == "brute") return CountMethod::BruteForce;
    if (method == "formula") return CountMethod::Formula;
    return CountMethod::TransferMatrix;
}

std::string read_input(const std::string& in_file) {
    std::ostringstream buffer;
    if (in_file.empty()) {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(in_file);
        if (!file) throw Error("cannot open input file '" + in_file + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

std::string trim(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    std::size_t last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(std::string(name) + ": " + e.what());
    }
}

// Conversion pipeline: bpath <-> elena <-> tree <-> apath.
enum class Kind { BPath = 0, Elena = 1, Tree = 2, APath = 3 };

Kind kind_from_flag(const std::string& name) {
    if (name == "bpath") return Kind::BPath;
    if (name == "elena") return Kind::Elena;
    if (name == "tree") return Kind::Tree;
    return Kind::APath;
}

using Object = std::variant<LatticePath, ElenaWord, PlaneTree, TaggedPath>;

// A tagged A-path prints as the path line plus an end-level comment line.
TaggedPath parse_apath(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string path_text;
    bool have_path = false;
    std::optional<int> tag;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::istringstream comment(t.substr(1));
            std::string word;
            int value = 0;
            char extra = 0;
            if (!(comment >> word >> value) || word != "end" || (comment >> extra) || tag)
                throw ParseError("bad apath comment '" + t + "'; expected '# end <level>'");
            tag = value;
        } else if (!have_path) {
            path_text = t;
            have_path = true;
        } else {
            throw ParseError("trailing input '" + t + "' after the apath");
        }
    }
    const LatticePath path = parse_path(path_text, kABand);
    const int end = tag.value_or(path.end_level());
    if (end != path.end_level())
        throw ParseError("apath tag " + std::to_string(end) + " does not match end level " +
                         std::to_string(path.end_level()));
    return {path, end};
}

Object parse_object(Kind kind, const std::string& text) {
    switch (kind) {
        case Kind::BPath: return stage("parse bpath", [&] { return parse_path(text, kBBand); });
        case Kind::Elena: return stage("parse elena", [&] { return parse_word(text); });
        case Kind::Tree: return stage("parse tree", [&] { return parse_tree(text); });
        case Kind::APath: return stage("parse apath", [&] { return parse_apath(text); });
    }
    throw InternalError("unknown object kind");
}

void print_object(const Object& obj, std::ostream& out) {
    if (const auto* path = std::get_if<LatticePath>(&obj)) {
        out << path->text() << '\n';
    } else if (const auto* word = std::get_if<ElenaWord>(&obj)) {
        out << word->text() << '\n';
    } else if (const auto* tree = std::get_if<PlaneTree>(&obj)) {
        out << render_tree(*tree) << '\n';
    } else {
        const auto& tagged = std::get<TaggedPath>(obj);
        out << tagged.path.text() << "\n# end " << tagged.tag << '\n';
    }
}

Object hop_forward(Object obj) {
    if (const auto* path = std::get_if<LatticePath>(&obj))
        return stage("decompose", [&] { return decompose_b_path(*path); });
    if (const auto* word = std::get_if<ElenaWord>(&obj))
        return stage("broom", [&] { return broom_elena_to_tree(word_to_elena(*word)); });
    const auto& tree = std::get<PlaneTree>(obj);
    const LatticePath path = stage("glove", [&] { return glove_tree_to_path(tree); });
    return stage("split", [&] { return split_last_two(path); });
}

Object hop_backward(Object obj) {
    if (const auto* tagged = std::get_if<TaggedPath>(&obj)) {
        const LatticePath path = stage("join", [&] { return join_last_two(*tagged); });
        return stage("glove", [&] { return glove_path_to_tree(path); });
    }
    if (const auto* tree = std::get_if<PlaneTree>(&obj))
        return stage("broom", [&] { return elena_to_word(broom_tree_to_elena(*tree)); });
    const auto& word = std::get<ElenaWord>(obj);
    return stage("compose", [&] { return compose_b_path(word); });
}

int run_convert(const std::string& from, const std::string& to, const std::string& in_file) {
    const Kind from_kind = kind_from_flag(from);
    const Kind to_kind = kind_from_flag(to);
    Object obj = parse_object(from_kind, read_input(in_file));
    for (int k = static_cast<int>(from_kind); k < static_cast<int>(to_kind); ++k)
        obj = hop_forward(std::move(obj));
    for (int k = static_cast<int>(from_kind); k > static_cast<int>(to_kind); --k)
        obj = hop_backward(std::move(obj));
    print_object(obj, std::cout);
    return 0;
}

int run_verify(int max_length, bool no_timing) {
    const auto start = std::chrono::steady_clock::now();
    const Report counts = verify_counts(max_length);
    const Report bijections = verify_bijections(max_length);
    counts.write(std::cout);
    bijections.write(std::cout);
    const std::size_t failures = counts.failure_count() + bijections.failure_count();
    std::cout << "checks=" << counts.records.size() + bijections.records.size()
              << " failures=" << failures << '\n';
    if (!no_timing) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        std::cout << "elapsed=" << elapsed.count() << "ms\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_render(const std::string& kind, const std::string& in_file) {
    const std::string text = read_input(in_file);
    if (kind == "path") {
        std::cout << ascii_path(parse_steps(text));
    } else if (kind == "tree") {
        std::cout << ascii_tree(parse_tree(text));
    } else {
        std::cout << ascii_elena(word_to_elena(parse_word(text)));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"height-restricted lattice paths, Elena trees, and their bijections"};
    app.require_subcommand(1);

    std::string family = "A";
    std::string method = "transfer";
    std::string from, to, kind;
    std::string in_file;
    int length = 0;
    int end = 0;
    int max_length = 20;
    bool no_timing = false;

    auto* cmd_count = app.add_subcommand("count", "count one family exactly");
    cmd_count->add_option("--family", family, "A or B")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    cmd_count->add_option("--length", length, "path length n")->required();
    cmd_count->add_option("--end", end, "end level i")->required();
    cmd_count->add_option("--method", method, "brute, transfer, or formula")
        ->check(CLI::IsMember({"brute", "transfer", "formula"}));

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list one family, one path per line");
    cmd_enumerate->add_option("--family", family, "A or B")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    cmd_enumerate->add_option("--length", length, "path length n")->required();
    cmd_enumerate->add_option("--end", end, "end level i")->required();

    auto* cmd_convert = app.add_subcommand("convert", "map an object along the bijection chain");
    const std::vector<std::string> kinds{"bpath", "elena", "tree", "apath"};
    cmd_convert->add_option("--from", from, "input kind")->required()->check(CLI::IsMember(kinds));
    cmd_convert->add_option("--to", to, "output kind")->required()->check(CLI::IsMember(kinds));
    cmd_convert->add_option("--in", in_file, "input file (default: stdin)");

    auto* cmd_verify = app.add_subcommand("verify", "run the exhaustive check suites");
    cmd_verify->add_option("--max-length", max_length, "largest family length (default 20)");
    cmd_verify->add_flag("--no-timing", no_timing, "suppress the elapsed-time footer");

    auto* cmd_render = app.add_subcommand("render", "draw an object as schematic ASCII");
    cmd_render->add_option("--kind", kind, "path, tree, or elena")
        ->required()
        ->check(CLI::IsMember({"path", "tree", "elena"}));
    cmd_render->add_option("--in", in_file, "input file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (cmd_count->parsed()) {
            const FamilySpec spec(band_from_flag(family), length, end);
            std::cout << count(spec, method_from_flag(method)) << '\n';
            return 0;
        }
        if (cmd_enumerate->parsed()) {
            const FamilySpec spec(band_from_flag(family), length, end);
            for (const LatticePath& path : generate(spec)) std::cout << path.text() << '\n';
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (cmd_convert->parsed()) return run_convert(from, to, in_file);
        if (cmd_verify->parsed()) return run_verify(max_length, no_timing);
        if (cmd_render->parsed()) return run_render(kind, in_file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
