#pragma once

// Independent reference computations for tests and the `verify oracle` suite.
// Nothing here calls the block or tangent formulas of the library.

#include "nesthilb/laurent.hpp"
#include "nesthilb/partition.hpp"

#include <utility>
#include <vector>

namespace nesthilb::oracle {

/// Exponents (a, b) of the minimal monomial generators t1^a t2^b of the
/// ideal of mu.
std::vector<std::pair<int, int>> minimal_generators(const Partition& mu);

/// Hilbert numerator of the ideal from its Taylor resolution:
///   sum over nonempty subsets S of generators of (-1)^(|S|-1) t^lcm(S).
LaurentPoly taylor_numerator(const Partition& mu);

/// Exact quotient by (1 - t1)(1 - t2); throws if the division is not exact.
LaurentPoly divide_by_delta(const LaurentPoly& p);

/// chi(O, O) - chi(I_a, I_b) = (1 - bar(P_a) P_b) / ((1 - t1)(1 - t2)).
LaurentPoly ext_block(const Partition& a, const Partition& b);

/// chi(O,O) - chi(I1,I1) - chi(I2,I2) + chi(I1,I2) + ... written as
/// (1 - bar(P1) P1 - bar(P2) P2 + bar(P1) P2) / ((1 - t1)(1 - t2)).
LaurentPoly tangent(const Partition& outer, const Partition& inner);

/// Brute-force count of tuples (one nested pair per chart) with total sizes
/// (n1, n2), by looping over every partition of size <= n1 on every chart.
long count_nested_fixed_points(int charts, int n1, int n2);

}  // namespace nesthilb::oracle
