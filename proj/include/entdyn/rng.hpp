// Seeded random state generation for the self-check command and the
// property tests.  Built on the fully specified mt19937_64 engine with
// hand-rolled transforms so a given seed produces the same states on every
// platform.
#pragma once

#include <cstdint>
#include <random>

#include "entdyn/measures.hpp"

namespace entdyn {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform();

    // Standard normal via Box-Muller; draws are cached in pairs.
    double normal();

    cxd complex_normal();

    // Normalized four-component vector with Gaussian components, uniform
    // under local and global unitaries of that distribution.
    PureState haar_state();

    // Random X-form density matrix carrying only one coherence family:
    // populations from a normalized exponential sample, coherence magnitude
    // a uniform fraction of its positivity bound, random phase.
    DensityMatrix random_x_state(Family family);

    // Mixture of `rank` haar states with normalized exponential weights.
    DensityMatrix random_density(int rank);

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace entdyn
