#include "elena/path.hpp"

#include <cctype>
#include <ostream>

namespace elena {

std::vector<Step> parse_steps(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'U') {
            steps.push_back(Step::Up);
        } else if (c == 'D') {
            steps.push_back(Step::Down);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("invalid character '") + c + "' at offset " +
                             std::to_string(i) + "; expected 'U' or 'D'");
        }
    }
    return steps;
}

std::string steps_text(const std::vector<Step>& steps) {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out.push_back(step_char(s));
    return out;
}

LatticePath::LatticePath(Band band, std::vector<Step> steps)
    : band_(band), steps_(std::move(steps)) {
    int level = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        level += level_change(steps_[i]);
        if (level < band_.lo() || level > band_.hi())
            throw BandViolation(i + 1, level, band_.lo(), band_.hi());
        if (level < min_) min_ = level;
        if (level > max_) max_ = level;
    }
    end_ = level;
}

std::vector<int> LatticePath::levels() const {
    std::vector<int> out;
    out.reserve(steps_.size() + 1);
    int level = 0;
    out.push_back(level);
    for (Step s : steps_) out.push_back(level += level_change(s));
    return out;
}

LatticePath parse_path(const std::string& text, Band band) {
    return LatticePath(band, parse_steps(text));
}

std::ostream& operator<<(std::ostream& out, const LatticePath& path) {
    return out << path.text();
}

FamilySpec::FamilySpec(Band band, int length, int end)
    : band_(band), length_(length), end_(end) {
    if (length < 0) throw Error("family length must be nonnegative");
    if (end < band.lo() || end > band.hi())
        throw Error("family end level " + std::to_string(end) + " outside band [" +
                    std::to_string(band.lo()) + ", " + std::to_string(band.hi()) + "]");
}

bool FamilySpec::contains(const LatticePath& path) const {
    return path.band() == band_ && path.length() == length_ && path.end_level() == end_;
}

std::string FamilySpec::name() const {
    std::string base;
    if (band_ == kABand) {
        base = "A";
    } else if (band_ == kBBand) {
        base = "B";
    } else {
        base = "band[" + std::to_string(band_.lo()) + "," + std::to_string(band_.hi()) + "]";
    }
    return base + "(" + std::to_string(length_) + "," + std::to_string(end_) + ")";
}

} // namespace elena
