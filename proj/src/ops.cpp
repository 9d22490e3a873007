#include "lt/ops.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lt/transport.hpp"

namespace lt {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kMinAngle = 1e-6;

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

const char* op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::TwoPointInterp: return "two-point interpolation";
        case OpKind::NPointInterp: return "n-point interpolation";
        case OpKind::Vicinity: return "vicinity sampling";
        case OpKind::Analogy: return "analogy";
        case OpKind::Slerp: return "slerp";
        case OpKind::RandomWalk: return "random walk";
    }
    return "unknown";
}

OperationSpec OperationSpec::two_point(double t) {
    OperationSpec op;
    op.kind = OpKind::TwoPointInterp;
    op.t = t;
    op.validate();
    return op;
}

OperationSpec OperationSpec::n_point(std::vector<double> weights) {
    OperationSpec op;
    op.kind = OpKind::NPointInterp;
    op.weights = std::move(weights);
    op.validate();
    return op;
}

OperationSpec OperationSpec::vicinity(double eps) {
    OperationSpec op;
    op.kind = OpKind::Vicinity;
    op.eps = eps;
    op.validate();
    return op;
}

OperationSpec OperationSpec::analogy() {
    OperationSpec op;
    op.kind = OpKind::Analogy;
    return op;
}

OperationSpec OperationSpec::slerp(double t) {
    OperationSpec op;
    op.kind = OpKind::Slerp;
    op.t = t;
    op.validate();
    return op;
}

OperationSpec OperationSpec::random_walk(double eps, std::size_t steps) {
    OperationSpec op;
    op.kind = OpKind::RandomWalk;
    op.eps = eps;
    op.steps = steps;
    op.validate();
    return op;
}

void OperationSpec::validate() const {
    switch (kind) {
        case OpKind::TwoPointInterp:
        case OpKind::Slerp:
            if (!(t >= 0.0 && t <= 1.0))
                throw std::invalid_argument("OperationSpec: t must lie in [0,1]");
            break;
        case OpKind::NPointInterp: {
            if (weights.empty())
                throw std::invalid_argument("OperationSpec: n-point needs weights");
            const double s = std::accumulate(weights.begin(), weights.end(), 0.0);
            if (std::fabs(s - 1.0) > kWeightSumTol)
                throw std::invalid_argument("OperationSpec: weights must sum to 1");
            break;
        }
        case OpKind::Vicinity:
            if (!(eps >= 0.0))
                throw std::invalid_argument("OperationSpec: eps must be >= 0");
            break;
        case OpKind::RandomWalk:
            if (!(eps >= 0.0))
                throw std::invalid_argument("OperationSpec: eps must be >= 0");
            if (steps < 1)
                throw std::invalid_argument("OperationSpec: steps must be >= 1");
            break;
        case OpKind::Analogy:
            break;
    }
}

namespace ops {

std::vector<double> linear_interpolate(std::span<const double> z1,
                                       std::span<const double> z2, double t) {
    require_same_dim(z1.size(), z2.size(), "linear_interpolate");
    std::vector<double> out(z1.size());
    for (std::size_t i = 0; i < z1.size(); ++i) out[i] = t * z1[i] + (1.0 - t) * z2[i];
    return out;
}

std::vector<double> n_point_interpolate(std::span<const std::span<const double>> zs,
                                        std::span<const double> weights) {
    if (zs.empty() || zs.size() != weights.size())
        throw std::invalid_argument("n_point_interpolate: need one weight per point");
    const double s = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::fabs(s - 1.0) > kWeightSumTol)
        throw std::invalid_argument("n_point_interpolate: weights must sum to 1");

    std::vector<double> out(zs.front().size(), 0.0);
    for (std::size_t k = 0; k < zs.size(); ++k) {
        require_same_dim(zs[k].size(), out.size(), "n_point_interpolate");
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[k] * zs[k][i];
    }
    return out;
}

LatentBatch vicinity_sample(std::span<const double> z, double eps, std::size_t k,
                            const PriorSpec& prior, std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("vicinity_sample: k must be >= 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("vicinity_sample: eps must be >= 0");

    const ScalarDist component(prior);
    LatentBatch out(k, z.size());
    for (std::size_t j = 0; j < k; ++j) {
        Rng rng(seed, stream_key(kStreamVicinityRow, j));
        auto row = out.row(j);
        for (std::size_t i = 0; i < z.size(); ++i) row[i] = z[i] + eps * component.sample(rng);
    }
    return out;
}

std::vector<double> analogy(std::span<const double> z1, std::span<const double> z2,
                            std::span<const double> z3) {
    require_same_dim(z1.size(), z2.size(), "analogy");
    require_same_dim(z1.size(), z3.size(), "analogy");
    std::vector<double> out(z1.size());
    for (std::size_t i = 0; i < z1.size(); ++i) out[i] = z3[i] + (z2[i] - z1[i]);
    return out;
}

std::vector<double> slerp(std::span<const double> z1, std::span<const double> z2, double t) {
    require_same_dim(z1.size(), z2.size(), "slerp");

    double dot = 0.0, n1 = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < z1.size(); ++i) {
        dot += z1[i] * z2[i];
        n1 += z1[i] * z1[i];
        n2 += z2[i] * z2[i];
    }
    n1 = std::sqrt(n1);
    n2 = std::sqrt(n2);
    if (n1 == 0.0 || n2 == 0.0) throw std::invalid_argument("slerp: zero-norm input");

    double cos_omega = dot / (n1 * n2);
    if (cos_omega > 1.0) cos_omega = 1.0;
    if (cos_omega < -1.0) cos_omega = -1.0;
    const double omega = std::acos(cos_omega);

    std::vector<double> out(z1.size());
    if (omega < kMinAngle) {
        // Nearly collinear: the arc degenerates, interpolate linearly with the
        // same endpoint convention (t=0 -> z1).
        for (std::size_t i = 0; i < z1.size(); ++i)
            out[i] = (1.0 - t) * z1[i] + t * z2[i];
        return out;
    }
    if (omega > 3.14159265358979323846 - kMinAngle)
        throw std::invalid_argument("slerp: near-antipodal inputs, arc is ambiguous");

    const double inv_sin = 1.0 / std::sin(omega);
    const double w1 = std::sin((1.0 - t) * omega) * inv_sin;
    const double w2 = std::sin(t * omega) * inv_sin;
    for (std::size_t i = 0; i < z1.size(); ++i) out[i] = w1 * z1[i] + w2 * z2[i];
    return out;
}

LatentBatch random_walk(std::span<const double> z0, double eps, std::size_t steps,
                        bool matched, const PriorSpec& prior, std::uint64_t seed,
                        std::uint64_t walker) {
    if (steps < 1) throw std::invalid_argument("random_walk: steps must be >= 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("random_walk: eps must be >= 0");

    const ScalarDist component(prior);
    const TransportMap1D step_map =
        matched ? matched_map(OperationSpec::vicinity(eps), prior) : TransportMap1D::identity();

    LatentBatch traj(steps + 1, z0.size());
    auto cur = traj.row(0);
    for (std::size_t i = 0; i < z0.size(); ++i) cur[i] = z0[i];

    for (std::size_t s = 1; s <= steps; ++s) {
        Rng rng(seed, stream_key(kStreamWalk, s, walker));
        auto prev = traj.row(s - 1);
        auto next = traj.row(s);
        for (std::size_t i = 0; i < z0.size(); ++i) {
            double y = prev[i] + eps * component.sample(rng);
            if (matched) y = step_map(y);
            next[i] = y;
        }
    }
    return traj;
}

}  // namespace ops
}  // namespace lt
