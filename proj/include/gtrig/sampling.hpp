#pragma once

#include <cstdint>
#include <random>

#include "gtrig/poly.hpp"

namespace gtrig::sampling {

using Rng = std::mt19937_64;

/// Uniform point in the disc |z| <= radius.
Complex in_disc(Rng& rng, double radius = 1.0);

/// `count` roots uniform in the unit disc, each at least `min_gap` from 0,
/// and, when `avoid_integers` is set, at least `min_gap` from every integer.
ComplexVector roots_in_unit_disc(Rng& rng, int count, double min_gap = 0.05, bool avoid_integers = false);

/// Monic polynomial with random roots as above and degree in [lo, hi].
Polynomial random_monic(Rng& rng, int lo, int hi, double min_gap = 0.05, bool avoid_integers = false);

}  // namespace gtrig::sampling
