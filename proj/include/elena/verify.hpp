#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace elena {

/// One verified claim instance. `witness` carries the offending object's
/// text on failure and is empty otherwise.
struct CheckRecord {
    std::string claim;
    int n = 0;
    std::string expected;
    std::string actual;
    std::string witness;
    bool pass = false;

    /// Canonical single-line form: key=value fields, witness quoted.
    std::string line() const;
};

/// Ordered list of check records; stable for a given max length.
struct Report {
    std::vector<CheckRecord> records;

    bool all_pass() const;
    std::size_t failure_count() const;
    void write(std::ostream& out) const;
};

/// For every n <= max_length: brute-force, transfer-matrix and closed-form
/// counts agree for all eight families, and the union identity holds.
Report verify_counts(int max_length);

/// For every even 2n <= max_length: the even composite on all of B(2n,0)
/// is injective with image exactly A(2n,0) + A(2n,2), each stage round
/// trips elementwise, and the last-group / rightmost-leaf / ends-"DD"
/// equivalence holds. For every odd 2n-1 <= max_length: the odd composite
/// is a bijection onto A(2n-1,1) + A(2n-1,3) and the augmented elements
/// satisfy all three subclass conditions.
Report verify_bijections(int max_length);

} // namespace elena
