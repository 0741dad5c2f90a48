#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace toric {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit with
/// overflow checks and repeats the elimination over GMP integers if needed.
int rank_rational(const IntMatrix& m);

/// Rank over F_p, p prime below 2^31.
int rank_mod_p(const IntMatrix& m, std::int64_t p);

/// Determinant of a square matrix, exact.
mpz_class determinant(const IntMatrix& m);

} // namespace toric
