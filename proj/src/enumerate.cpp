#include "elena/enumerate.hpp"

#include <cstdlib>

namespace elena {

Count fib(long long k) {
    if (k < -1) throw Error("fib is defined for k >= -1, got " + std::to_string(k));
    Count prev = 1;  // F(-1)
    Count cur = 0;   // F(0)
    if (k == -1) return prev;
    for (long long i = 0; i < k; ++i) {
        Count next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

void generate_rec(const FamilySpec& spec, std::vector<Step>& prefix, int level,
                  std::vector<LatticePath>& out) {
    const int remaining = spec.length() - static_cast<int>(prefix.size());
    if (remaining == 0) {
        if (level == spec.end()) out.emplace_back(spec.band(), prefix);
        return;
    }
    if (std::abs(level - spec.end()) > remaining) return;  // end level unreachable
    for (Step s : {Step::Up, Step::Down}) {
        const int next = level + level_change(s);
        if (next < spec.band().lo() || next > spec.band().hi()) continue;
        prefix.push_back(s);
        generate_rec(spec, prefix, next, out);
        prefix.pop_back();
    }
}

Count count_transfer(const FamilySpec& spec) {
    if (!spec.parity_ok()) return 0;
    const int lo = spec.band().lo();
    const int width = spec.band().hi() - lo + 1;
    std::vector<Count> occupancy(width, 0);
    occupancy[0 - lo] = 1;
    for (int step = 0; step < spec.length(); ++step) {
        std::vector<Count> next(width, 0);
        for (int i = 0; i < width; ++i) {
            if (occupancy[i] == 0) continue;
            if (i + 1 < width) next[i + 1] += occupancy[i];
            if (i - 1 >= 0) next[i - 1] += occupancy[i];
        }
        occupancy = std::move(next);
    }
    return occupancy[spec.end() - lo];
}

Count count_formula(const FamilySpec& spec) {
    if (spec.band() != kABand && spec.band() != kBBand)
        throw FormulaUnavailable("no closed form tabulated for " + spec.name());
    if (!spec.parity_ok()) return 0;
    const long long n = spec.length();
    if (spec.band() == kABand) {
        switch (spec.end()) {
            case 0: return fib(n - 1);
            case 2: return fib(n);
            case 1: return fib(n);
            case 3: return fib(n - 1);
        }
    } else {
        switch (spec.end()) {
            case 0: return fib(n + 1);
            case -2: return fib(n);
            case 1: return fib(n);
            case -1: return fib(n + 1);
        }
    }
    throw InternalError("unreachable family end " + spec.name());
}

} // namespace

std::vector<LatticePath> generate(const FamilySpec& spec) {
    std::vector<LatticePath> out;
    if (!spec.parity_ok()) return out;
    std::vector<Step> prefix;
    prefix.reserve(spec.length());
    generate_rec(spec, prefix, 0, out);
    return out;
}

Count count(const FamilySpec& spec, CountMethod method) {
    switch (method) {
        case CountMethod::BruteForce: return Count(generate(spec).size());
        case CountMethod::TransferMatrix: return count_transfer(spec);
        case CountMethod::Formula: return count_formula(spec);
    }
    throw InternalError("unknown count method");
}

UnionCounts union_identity_counts(int length) {
    UnionCounts result{0, 0};
    for (int end = 0; end <= 3; ++end)
        result.lhs += count(family_a(length, end), CountMethod::TransferMatrix);
    result.rhs = count(family_b(length, 0), CountMethod::TransferMatrix) +
                 count(family_b(length, -1), CountMethod::TransferMatrix);
    return result;
}

} // namespace elena
