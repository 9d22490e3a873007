#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lt/batch.hpp"
#include "lt/prior.hpp"

namespace lt {

enum class OpKind {
    TwoPointInterp,
    NPointInterp,
    Vicinity,
    Analogy,
    Slerp,
    RandomWalk,
};

const char* op_kind_name(OpKind kind);

// Descriptor of a latent operation. Only the fields relevant to `kind` are
// meaningful; validate() checks the per-kind invariants.
struct OperationSpec {
    OpKind kind = OpKind::TwoPointInterp;
    double t = 0.5;                // two-point interpolation / slerp
    std::vector<double> weights;   // n-point interpolation, must sum to 1
    double eps = 0.0;              // vicinity and random walk step size
    std::size_t steps = 1;         // random walk length

    static OperationSpec two_point(double t);
    static OperationSpec n_point(std::vector<double> weights);
    static OperationSpec vicinity(double eps);
    static OperationSpec analogy();
    static OperationSpec slerp(double t);
    static OperationSpec random_walk(double eps, std::size_t steps);

    void validate() const;  // throws std::invalid_argument
};

namespace ops {

// y = t*z1 + (1-t)*z2, componentwise. t=1 returns z1, t=0 returns z2.
std::vector<double> linear_interpolate(std::span<const double> z1,
                                       std::span<const double> z2, double t);

// y = sum_i w_i * zs[i]; the weights must sum to 1 (within 1e-12).
std::vector<double> n_point_interpolate(std::span<const std::span<const double>> zs,
                                        std::span<const double> weights);

// k draws y_j = z + eps*u_j with u following the prior's component
// distribution (uniform prior perturbs uniformly, Gaussian perturbs normally).
LatentBatch vicinity_sample(std::span<const double> z, double eps, std::size_t k,
                            const PriorSpec& prior, std::uint64_t seed);

// y = z3 + (z2 - z1).
std::vector<double> analogy(std::span<const double> z1, std::span<const double> z2,
                            std::span<const double> z3);

// Spherical interpolation along the great arc: t=0 returns z1, t=1 returns z2.
// Falls back to linear interpolation when the angle is below 1e-6 and throws
// for near-antipodal inputs (the arc is ambiguous there).
std::vector<double> slerp(std::span<const double> z1, std::span<const double> z2, double t);

// Trajectory of `steps` vicinity moves starting at z0; returns steps+1 rows
// with row 0 = z0. When `matched`, every step is pulled back to the prior by
// the matched vicinity map. Step draws use streams keyed on
// (seed, step, walker), so a row of a batch walk reproduces exactly.
LatentBatch random_walk(std::span<const double> z0, double eps, std::size_t steps,
                        bool matched, const PriorSpec& prior, std::uint64_t seed,
                        std::uint64_t walker = 0);

}  // namespace ops
}  // namespace lt
