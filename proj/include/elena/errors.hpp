#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elena {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed object text: bad character, unbalanced parentheses, bad token,
/// trailing input, or a token sequence that is not Elena shaped.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A step sequence leaves its band; reports the first offending prefix.
class BandViolation : public Error {
public:
    BandViolation(std::size_t index, int level, int lo, int hi)
        : Error("level " + std::to_string(level) + " at index " + std::to_string(index) +
                " outside band [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          index_(index),
          level_(level) {}

    std::size_t index() const { return index_; }
    int level() const { return level_; }

private:
    std::size_t index_;
    int level_;
};

/// The input path does not belong to the family the map is defined on.
class NotInFamily : public Error {
public:
    using Error::Error;
};

/// A plane tree of height > 3, which has no band-confined path.
class TooTall : public Error {
public:
    using Error::Error;
};

/// The one-node plane tree, which has no Elena counterpart.
class SingleNode : public Error {
public:
    using Error::Error;
};

/// Closed-form counting requested for a band without a tabulated formula.
class FormulaUnavailable : public Error {
public:
    using Error::Error;
};

/// A property the construction guarantees failed to hold; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace elena
