#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lt/batch.hpp"
#include "lt/ops.hpp"
#include "lt/prior.hpp"

namespace lt {

// Non-decreasing scalar map sending one component distribution onto another.
// Either closed-form (scale / uniform-interpolation / uniform-vicinity) or a
// tabulated monotone piecewise-linear interpolant. Immutable; concurrent
// application is safe.
class TransportMap1D {
public:
    enum class Form { Scale, UniformInterp, UniformVicinity, Tabulated };

    static TransportMap1D identity() { return scale(1.0); }
    static TransportMap1D scale(double c);
    static TransportMap1D uniform_interp(double t, double half_width = 1.0);
    static TransportMap1D uniform_vicinity(double eps, double half_width = 1.0);

    // grid_y strictly increasing, grid_z non-decreasing, at least 2 knots.
    static TransportMap1D tabulated(std::vector<double> grid_y, std::vector<double> grid_z);

    double operator()(double y) const;

    Form form() const { return form_; }
    double scale_factor() const { return c_; }
    std::span<const double> grid_y() const { return grid_y_; }
    std::span<const double> grid_z() const { return grid_z_; }

    // Two-column CSV, header "y,z", one knot per row. Closed forms are
    // sampled on a 256-point grid over their natural support first.
    void write_csv(const std::string& path) const;

private:
    TransportMap1D() = default;
    Form form_ = Form::Scale;
    double c_ = 1.0;          // Scale
    double t_ = 0.5;          // UniformInterp
    double eps_ = 0.0;        // UniformVicinity
    double half_width_ = 1.0; // uniform forms
    std::vector<double> grid_y_, grid_z_;
};

// Scale factor c with y_matched = c*y for additive operations under a
// Gaussian prior. Supported kinds: two-point and n-point interpolation,
// vicinity sampling, analogy; anything else throws.
double gaussian_matched_scale(const OperationSpec& op);

// CDF of the component distribution of t*Z1 + (1-t)*Z2 for Z ~ Uniform(-1,1).
// Piecewise quadratic; symmetric in t <-> 1-t; clamps outside [-1,1].
double uniform_interp_cdf(double y, double t);

// Monotone map sending the interpolation component distribution above back to
// Uniform(-1,1): two_sided quantile composed with the CDF.
double uniform_interp_map(double y, double t);

// Monotone map sending Z + eps*U (both Uniform(-1,1)) back to Uniform(-1,1).
// Reduces to the interpolation map at t = 1/(1+eps) applied to t*y.
double uniform_vicinity_map(double y, double eps);

// Tabulated monotone map from Monte-Carlo samples of the operation's scalar
// component: knots sit at equally spaced probabilities of the sampled
// distribution, and knot images are prior quantiles of the empirical CDF
// (right-continuous, ties counted by <=). Requires a pointwise operation,
// n_samples >= 1e4 and knots >= 64.
TransportMap1D build_empirical_map(const OperationSpec& op, const PriorSpec& prior,
                                   std::size_t n_samples, std::size_t knots,
                                   std::uint64_t seed);

// Picks the matched map for (prior, operation): closed forms where available
// (Gaussian additive ops; uniform two-point interpolation and vicinity),
// otherwise an empirical tabulated map. Slerp has no matched version.
TransportMap1D matched_map(const OperationSpec& op, const PriorSpec& prior,
                           std::uint64_t seed = 0x7261774DULL,
                           std::size_t n_samples = 1000000, std::size_t knots = 256);

// Entrywise application; every scalar in the batch is mapped independently.
LatentBatch apply_matched(const LatentBatch& batch, const TransportMap1D& map);

// Runs the operation on the inputs and pulls the result back to the prior.
// Input batches must be row-aligned; count depends on the kind (2 for
// two-point, |weights| for n-point, 1 for vicinity/random-walk, 3 for
// analogy). The seed feeds vicinity/walk perturbations and empirical map
// construction.
LatentBatch matched_operation(const OperationSpec& op, const PriorSpec& prior,
                              std::span<const LatentBatch> inputs,
                              std::uint64_t seed = 0);

}  // namespace lt
