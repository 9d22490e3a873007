#pragma once

#include <cstddef>
#include <cstdint>

#include "lt/rng.hpp"

namespace lt {

enum class Family { UniformSymmetric, Gaussian };

// Prior with i.i.d. components: either Uniform(-a, a) or N(0, sigma^2) per
// coordinate, in `dim` dimensions. Immutable after construction.
struct PriorSpec {
    Family family = Family::UniformSymmetric;
    double half_width = 1.0;  // uniform support [-half_width, half_width]
    double sigma = 1.0;
    std::size_t dim = 1;

    static PriorSpec uniform(double a, std::size_t d);
    static PriorSpec gaussian(double sigma, std::size_t d);

    void validate() const;  // throws std::invalid_argument
};

struct Moments {
    double mean;
    double var;
    double mu_z2;   // E[Z^2]
    double var_z2;  // Var[Z^2]
};

// Scalar component distribution of a prior: CDF, quantile and exact moments.
// Immutable and safe for concurrent use.
class ScalarDist {
public:
    explicit ScalarDist(const PriorSpec& spec);
    static ScalarDist uniform(double a);
    static ScalarDist gaussian(double sigma);

    // Exact for uniform; erfc-based for Gaussian (abs error <= 1e-12).
    // Arguments outside the support clamp to 0 or 1.
    double cdf(double x) const;

    // Pseudo-inverse of the CDF. Throws std::domain_error for p outside [0,1].
    // Gaussian p in {0,1} saturates at -+8*sigma so downstream tables stay finite.
    double quantile(double p) const;

    Moments moments() const;
    double mean() const { return 0.0; }
    double var() const;
    double mu_z2() const { return var(); }  // symmetric, zero-mean families
    double var_z2() const;

    Family family() const { return family_; }
    double param() const { return param_; }

    // One draw from the component distribution using the given stream.
    double sample(Rng& rng) const;

private:
    ScalarDist(Family f, double param);
    Family family_;
    double param_;  // half_width or sigma
};

inline Moments component_moments(const ScalarDist& dist) { return dist.moments(); }

}  // namespace lt
