#pragma once

#include "toric/lattice.hpp"

#include <cstdint>
#include <random>

namespace toric {

/// Seeded source for every random family (std::mt19937_64, draws reduced modulo the range).
using Rng = std::mt19937_64;

/// Delta_1: every point of norm <= D.
GeneratorSet veronese(int d, std::int64_t degree);

/// {0, e_i', (D-1)e_i', D e_i', e_i' + (D-1)e_j'}.
GeneratorSet minimal_smooth(int d, std::int64_t degree);

/// minimal_smooth plus `extras` random points of Delta_1.
GeneratorSet smooth_random(int d, std::int64_t degree, int extras, Rng& rng);

/// {0, D e_i', (D-e)e_i', (D-1)e_i' + e_j'}.
GeneratorSet one_singular_base(int d, std::int64_t degree, std::int64_t e);

/// Base plus `extras` random points of N_e^d with norm <= D (norm D when e = D),
/// resampled until the set is one-singular at vertex 0 with divisor e.
GeneratorSet one_singular_random(int d, std::int64_t degree, std::int64_t e, int extras, Rng& rng);

/// Random subset of Delta_1 containing 0 and the D e_i' (no family guarantee).
GeneratorSet random_set(int d, std::int64_t degree, int extras, Rng& rng);

/// d = 2, D = 6 set whose homogenization is the 8-vector chart example of N^3.
GeneratorSet chart_example();

/// d = 2, D = 4: {(0,0),(4,0),(0,4),(3,1),(1,3),(2,0),(0,2)}.
GeneratorSet one_hole_quartic();

/// d = 2, D = 6: even-norm points of Delta_1 except (2,4) and (3,3).
GeneratorSet even_sextic();

} // namespace toric
