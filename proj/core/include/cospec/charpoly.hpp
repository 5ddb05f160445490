#pragma once

#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// det(λI − M), monic of degree order(M), via Faddeev–LeVerrier. Integral
/// matrices run the recurrence over big integers (every intermediate stays
/// integral); others over rationals.
UniPoly charpoly(const ExactMatrix& m);

/// Largest order accepted by charpoly_oracle.
inline constexpr std::size_t kMaxOracleOrder = 7;

/// det(λI − M) by symbolic Leibniz expansion over all permutations. Slow and
/// independent of charpoly; meant for cross-checking. Throws
/// PreconditionError above kMaxOracleOrder.
UniPoly charpoly_oracle(const ExactMatrix& m);

}  // namespace cospec
