#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "elena/errors.hpp"

namespace elena {

/// One unit step of a lattice path.
enum class Step : unsigned char { Up, Down };

constexpr int level_change(Step s) { return s == Step::Up ? +1 : -1; }
constexpr char step_char(Step s) { return s == Step::Up ? 'U' : 'D'; }

/// Closed interval of admissible levels. Paths start at level 0, so every
/// band must contain it.
class Band {
public:
    constexpr Band(int lo, int hi) : lo_(lo), hi_(hi) {
        if (lo > 0 || hi < 0) throw Error("band must contain level 0");
    }

    constexpr int lo() const { return lo_; }
    constexpr int hi() const { return hi_; }

    friend constexpr bool operator==(Band, Band) = default;

private:
    int lo_;
    int hi_;
};

inline constexpr Band kABand{0, 3};
inline constexpr Band kBBand{-2, 1};

/// Parse a ±1 step sequence over the alphabet {U, D}; case-sensitive,
/// whitespace is ignored.
std::vector<Step> parse_steps(const std::string& text);

std::string steps_text(const std::vector<Step>& steps);

/// A band-confined walk: unit steps from level 0 with every prefix level
/// inside the band. Immutable after construction, safe to share across
/// threads.
class LatticePath {
public:
    /// Validates the band invariant; throws BandViolation with the index of
    /// the first prefix level that escapes.
    LatticePath(Band band, std::vector<Step> steps);

    Band band() const { return band_; }
    const std::vector<Step>& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int end_level() const { return end_; }
    int min_level() const { return min_; }
    int max_level() const { return max_; }

    /// Prefix-sum levels s0..sn; always length()+1 entries, s0 = 0.
    std::vector<int> levels() const;

    std::string text() const { return steps_text(steps_); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    Band band_;
    std::vector<Step> steps_;
    int end_ = 0;
    int min_ = 0;
    int max_ = 0;
};

LatticePath parse_path(const std::string& text, Band band);

std::ostream& operator<<(std::ostream& out, const LatticePath& path);

/// Names one family: all band-confined paths of a given length ending at a
/// given level. The family is empty when end and length differ in parity.
class FamilySpec {
public:
    FamilySpec(Band band, int length, int end);

    Band band() const { return band_; }
    int length() const { return length_; }
    int end() const { return end_; }

    bool parity_ok() const { return (length_ - end_) % 2 == 0; }
    bool contains(const LatticePath& path) const;

    /// "A(8,0)", "B(4,-2)", or "band[lo,hi](n,i)" for other bands.
    std::string name() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    Band band_;
    int length_;
    int end_;
};

inline FamilySpec family_a(int length, int end) { return {kABand, length, end}; }
inline FamilySpec family_b(int length, int end) { return {kBBand, length, end}; }

} // namespace elena
