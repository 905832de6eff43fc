#pragma once

#include <cstdint>
#include <random>

namespace gaussopt {

/// Deterministic standard-normal sampler.
///
/// Uniform bits come from std::mt19937_64 (fully specified by the standard,
/// so streams are reproducible across compilers for a given seed) and are
/// mapped to doubles in [0,1) by taking the top 53 bits. Normal deviates use
/// the Marsaglia polar method: draw (u,v) uniform on [-1,1)^2, accept when
/// s = u^2+v^2 lies in (0,1), return u*sqrt(-2 ln s / s) and keep the v
/// variate as a spare for the next call.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    /// Next standard-normal deviate.
    double next();

    /// Next uniform double in [0, 1).
    double next_uniform();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace gaussopt
