#include "lt/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lt/io.hpp"
#include "lt/kernels.hpp"

namespace lt {

namespace {

// t values this close to an endpoint make the interpolation degenerate to a
// single prior draw; the CDF then is the prior CDF itself.
constexpr double kDegenerateT = 1e-12;

double clamp01(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }

}  // namespace

TransportMap1D TransportMap1D::scale(double c) {
    if (!std::isfinite(c) || c <= 0.0)
        throw std::invalid_argument("TransportMap1D::scale: factor must be positive");
    TransportMap1D m;
    m.form_ = Form::Scale;
    m.c_ = c;
    return m;
}

TransportMap1D TransportMap1D::uniform_interp(double t, double half_width) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("TransportMap1D::uniform_interp: t must lie in [0,1]");
    if (!(half_width > 0.0))
        throw std::invalid_argument("TransportMap1D::uniform_interp: half_width must be positive");
    TransportMap1D m;
    m.form_ = Form::UniformInterp;
    m.t_ = t;
    m.half_width_ = half_width;
    return m;
}

TransportMap1D TransportMap1D::uniform_vicinity(double eps, double half_width) {
    if (!(eps >= 0.0))
        throw std::invalid_argument("TransportMap1D::uniform_vicinity: eps must be >= 0");
    if (!(half_width > 0.0))
        throw std::invalid_argument("TransportMap1D::uniform_vicinity: half_width must be positive");
    if (eps == 0.0) return identity();
    TransportMap1D m;
    m.form_ = Form::UniformVicinity;
    m.eps_ = eps;
    m.half_width_ = half_width;
    return m;
}

TransportMap1D TransportMap1D::tabulated(std::vector<double> grid_y,
                                         std::vector<double> grid_z) {
    if (grid_y.size() != grid_z.size() || grid_y.size() < 2)
        throw std::invalid_argument("TransportMap1D::tabulated: need >= 2 aligned knots");
    for (std::size_t i = 1; i < grid_y.size(); ++i) {
        if (!(grid_y[i] > grid_y[i - 1]))
            throw std::invalid_argument("TransportMap1D::tabulated: grid_y must strictly increase");
        if (grid_z[i] < grid_z[i - 1])
            throw std::invalid_argument("TransportMap1D::tabulated: grid_z must be non-decreasing");
    }
    TransportMap1D m;
    m.form_ = Form::Tabulated;
    m.grid_y_ = std::move(grid_y);
    m.grid_z_ = std::move(grid_z);
    return m;
}

double TransportMap1D::operator()(double y) const {
    switch (form_) {
        case Form::Scale:
            return c_ * y;
        case Form::UniformInterp:
            return half_width_ * uniform_interp_map(y / half_width_, t_);
        case Form::UniformVicinity:
            return half_width_ * uniform_vicinity_map(y / half_width_, eps_);
        case Form::Tabulated: {
            // Out-of-grid inputs clamp to the boundary knot images.
            if (y <= grid_y_.front()) return grid_z_.front();
            if (y >= grid_y_.back()) return grid_z_.back();
            const auto it = std::upper_bound(grid_y_.begin(), grid_y_.end(), y);
            const std::size_t i = static_cast<std::size_t>(it - grid_y_.begin());
            const double u = (y - grid_y_[i - 1]) / (grid_y_[i] - grid_y_[i - 1]);
            return grid_z_[i - 1] + u * (grid_z_[i] - grid_z_[i - 1]);
        }
    }
    return y;
}

void TransportMap1D::write_csv(const std::string& path) const {
    std::vector<std::vector<double>> rows;
    if (form_ == Form::Tabulated) {
        rows.reserve(grid_y_.size());
        for (std::size_t i = 0; i < grid_y_.size(); ++i)
            rows.push_back({grid_y_[i], grid_z_[i]});
    } else {
        double lo = -8.0, hi = 8.0;
        if (form_ == Form::UniformInterp) {
            lo = -half_width_;
            hi = half_width_;
        } else if (form_ == Form::UniformVicinity) {
            lo = -(1.0 + eps_) * half_width_;
            hi = (1.0 + eps_) * half_width_;
        }
        constexpr std::size_t kGrid = 256;
        rows.reserve(kGrid);
        for (std::size_t i = 0; i < kGrid; ++i) {
            const double y = lo + (hi - lo) * static_cast<double>(i) / (kGrid - 1);
            rows.push_back({y, (*this)(y)});
        }
    }
    const std::string header[] = {"y", "z"};
    io::write_csv_report(path, header, rows);
}

double gaussian_matched_scale(const OperationSpec& op) {
    switch (op.kind) {
        case OpKind::TwoPointInterp:
            return 1.0 / std::sqrt(op.t * op.t + (1.0 - op.t) * (1.0 - op.t));
        case OpKind::NPointInterp: {
            double s2 = 0.0;
            for (const double w : op.weights) s2 += w * w;
            if (s2 <= 0.0)
                throw std::invalid_argument("gaussian_matched_scale: degenerate weights");
            return 1.0 / std::sqrt(s2);
        }
        case OpKind::Vicinity:
            return 1.0 / std::sqrt(1.0 + op.eps * op.eps);
        case OpKind::Analogy:
            return 1.0 / std::sqrt(3.0);
        default:
            throw std::invalid_argument(
                std::string("gaussian_matched_scale: unsupported kind: ") +
                op_kind_name(op.kind));
    }
}

double uniform_interp_cdf(double y, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("uniform_interp_cdf: t must lie in [0,1]");
    if (t < 0.5) t = 1.0 - t;  // Y_t and Y_{1-t} are identically distributed

    if (y <= -1.0) return 0.0;
    if (y >= 1.0) return 1.0;
    if (1.0 - t < kDegenerateT) return 0.5 * (y + 1.0);  // endpoint: Y is the prior draw

    // Density of t*Z1 + (1-t)*Z2 is the convolution of two boxes: a trapezoid
    // with corners at -1, 1-2t, 2t-1, 1 (triangle when t = 1/2). Integrating
    // gives a piecewise quadratic with total mass norm.
    const double norm = 2.0 * (1.0 - t) * (2.0 * t);
    const double s = 2.0 * t - 1.0;  // inner breakpoint, >= 0
    double acc;
    if (y <= -s) {
        acc = 0.5 * (y + 1.0) * (y + 1.0);
    } else if (y <= s) {
        acc = 2.0 * (1.0 - t) * (y + t);
    } else {
        acc = 2.0 * (1.0 - t) * (3.0 * t - 1.0) + (-0.5 * y * y + y + 0.5 * s * s - s);
    }
    return clamp01(acc / norm);
}

double uniform_interp_map(double y, double t) {
    return 2.0 * (uniform_interp_cdf(y, t) - 0.5);
}

double uniform_vicinity_map(double y, double eps) {
    if (!(eps >= 0.0))
        throw std::invalid_argument("uniform_vicinity_map: eps must be >= 0");
    if (eps == 0.0) return y;
    // Z + eps*U rescaled by t = 1/(1+eps) has the law of the interpolation
    // t*Z1 + (1-t)*Z2, so that map transports it back to the prior.
    const double t = 1.0 / (1.0 + eps);
    return uniform_interp_map(t * y, t);
}

TransportMap1D build_empirical_map(const OperationSpec& op, const PriorSpec& prior,
                                   std::size_t n_samples, std::size_t knots,
                                   std::uint64_t seed) {
    op.validate();
    prior.validate();
    if (op.kind == OpKind::Slerp)
        throw std::invalid_argument("build_empirical_map: slerp is not pointwise");
    if (n_samples < 10000)
        throw std::invalid_argument("build_empirical_map: need n_samples >= 1e4");
    if (knots < 64) throw std::invalid_argument("build_empirical_map: need knots >= 64");

    std::vector<double> ys = kernels::sample_op_scalar(op, prior, n_samples, seed);
    std::sort(ys.begin(), ys.end());

    const ScalarDist component(prior);
    const double n = static_cast<double>(n_samples);
    std::vector<double> grid_y, grid_z;
    grid_y.reserve(knots);
    grid_z.reserve(knots);

    for (std::size_t k = 0; k < knots; ++k) {
        // Knot at the empirical p-quantile, p equally spaced in (0,1); this
        // resolves the thin tails better than an equally spaced y grid.
        const double p = (static_cast<double>(k) + 0.5) / static_cast<double>(knots);
        std::size_t idx = static_cast<std::size_t>(std::ceil(p * n)) - 1;
        if (idx >= n_samples) idx = n_samples - 1;
        const double y = ys[idx];
        if (!grid_y.empty() && !(y > grid_y.back())) continue;  // drop tied knots

        const auto le = std::upper_bound(ys.begin(), ys.end(), y) - ys.begin();
        const double cdf_hat = static_cast<double>(le) / n;
        double z = component.quantile(cdf_hat);
        if (!grid_z.empty() && z < grid_z.back()) z = grid_z.back();
        grid_y.push_back(y);
        grid_z.push_back(z);
    }

    if (grid_y.size() < 2)
        throw std::runtime_error("build_empirical_map: degenerate sample, fewer than 2 knots");
    return TransportMap1D::tabulated(std::move(grid_y), std::move(grid_z));
}

TransportMap1D matched_map(const OperationSpec& op, const PriorSpec& prior,
                           std::uint64_t seed, std::size_t n_samples, std::size_t knots) {
    op.validate();
    prior.validate();
    if (op.kind == OpKind::Slerp)
        throw std::invalid_argument("matched_map: slerp has no matched version");

    if (prior.family == Family::Gaussian) {
        switch (op.kind) {
            case OpKind::TwoPointInterp:
            case OpKind::NPointInterp:
            case OpKind::Vicinity:
            case OpKind::Analogy:
                return TransportMap1D::scale(gaussian_matched_scale(op));
            default:
                break;
        }
    } else {
        if (op.kind == OpKind::TwoPointInterp)
            return TransportMap1D::uniform_interp(op.t, prior.half_width);
        if (op.kind == OpKind::Vicinity)
            return TransportMap1D::uniform_vicinity(op.eps, prior.half_width);
    }
    // Remaining pointwise combinations get a tabulated map.
    return build_empirical_map(op, prior, n_samples, knots, seed);
}

LatentBatch apply_matched(const LatentBatch& batch, const TransportMap1D& map) {
    return kernels::apply_map(batch, map);
}

namespace {

LatentBatch final_walk_positions(const LatentBatch& start, const OperationSpec& op,
                                 const PriorSpec& prior, std::uint64_t seed) {
    const LatentBatch traj = kernels::walk_batch(start, op.eps, op.steps, false, prior, seed);
    LatentBatch out(start.rows(), start.dim());
    const std::size_t offset = op.steps * start.rows();
    for (std::size_t i = 0; i < start.rows(); ++i) {
        auto dst = out.row(i);
        const auto src = traj.row(offset + i);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

}  // namespace

LatentBatch matched_operation(const OperationSpec& op, const PriorSpec& prior,
                              std::span<const LatentBatch> inputs, std::uint64_t seed) {
    op.validate();
    prior.validate();

    const auto need = [&](std::size_t k) {
        if (inputs.size() != k)
            throw std::invalid_argument(std::string("matched_operation: ") +
                                        op_kind_name(op.kind) + " expects " +
                                        std::to_string(k) + " input batch(es)");
    };

    LatentBatch raw(1, 1);
    switch (op.kind) {
        case OpKind::TwoPointInterp:
            need(2);
            raw = kernels::interpolate_pairs(inputs[0], inputs[1], op.t);
            break;
        case OpKind::NPointInterp:
            need(op.weights.size());
            raw = kernels::npoint_combine(inputs, op.weights);
            break;
        case OpKind::Vicinity:
            need(1);
            raw = kernels::vicinity_batch(inputs[0], prior, op.eps, seed);
            break;
        case OpKind::Analogy:
            need(3);
            raw = kernels::analogy_batch(inputs[0], inputs[1], inputs[2]);
            break;
        case OpKind::RandomWalk:
            need(1);
            raw = final_walk_positions(inputs[0], op, prior, seed);
            break;
        case OpKind::Slerp:
            throw std::invalid_argument(
                "matched_operation: slerp is a comparison baseline with no matched version");
    }

    return kernels::apply_map(raw, matched_map(op, prior, seed));
}

}  // namespace lt
