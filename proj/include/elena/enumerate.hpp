#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elena/path.hpp"

namespace elena {

/// Exact arbitrary-precision count.
using Count = boost::multiprecision::cpp_int;

enum class CountMethod { BruteForce, TransferMatrix, Formula };

/// Fibonacci numbers with F1 = F2 = 1, extended downward by F0 = 0 and
/// F(-1) = 1 so the closed-form family counts hold at length 0.
Count fib(long long k);

/// Every path of the family exactly once, in lexicographic order with U
/// before D. Empty when end level and length differ in parity.
std::vector<LatticePath> generate(const FamilySpec& spec);

/// All three methods agree on every family. Formula is only tabulated for
/// the A and B bands and throws FormulaUnavailable elsewhere; families
/// empty by parity count as 0 under every method.
Count count(const FamilySpec& spec, CountMethod method);

/// Both sides of the cross-band identity: all A families of length n taken
/// together against B(n,0) + B(n,-1). Computed by transfer matrix.
struct UnionCounts {
    Count lhs;
    Count rhs;
};
UnionCounts union_identity_counts(int length);

} // namespace elena
