#include "gtrig/sampling.hpp"

namespace gtrig::sampling {

Complex in_disc(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    return std::polar(r, 2.0 * kPi * u(rng));
}

ComplexVector roots_in_unit_disc(Rng& rng, int count, double min_gap, bool avoid_integers) {
    ComplexVector roots;
    while (static_cast<int>(roots.size()) < count) {
        const Complex z = in_disc(rng);
        const double gap = avoid_integers ? distance_to_integers(z) : std::abs(z);
        if (gap >= min_gap) roots.push_back(z);
    }
    return roots;
}

Polynomial random_monic(Rng& rng, int lo, int hi, double min_gap, bool avoid_integers) {
    std::uniform_int_distribution<int> degree(lo, hi);
    return Polynomial::from_roots(roots_in_unit_disc(rng, degree(rng), min_gap, avoid_integers));
}

}  // namespace gtrig::sampling
