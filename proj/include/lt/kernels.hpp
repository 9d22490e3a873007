#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lt/batch.hpp"
#include "lt/ops.hpp"
#include "lt/prior.hpp"
#include "lt/transport.hpp"

// Data-parallel kernels (OpenMP when available). Work is split into fixed
// chunks (lt::kChunk): each chunk owns its RNG stream and its partial sums,
// so every kernel returns bit-identical results for any thread count. The
// serial counterparts in lt::ref keep the same contracts and are compared
// against these in the test suite and the benchmark.

namespace lt::kernels {

// n i.i.d. prior rows. Identical (seed, salt, spec, n) give identical
// batches; the salt keeps multiple batches of one experiment disjoint.
LatentBatch sample_batch(const PriorSpec& prior, std::size_t n, std::uint64_t seed,
                         std::uint64_t salt = 0);

// n draws of the scalar component distribution of the operation's output.
std::vector<double> sample_op_scalar(const OperationSpec& op, const PriorSpec& prior,
                                     std::size_t n, std::uint64_t seed);

// Rowwise t*z1 + (1-t)*z2.
LatentBatch interpolate_pairs(const LatentBatch& z1, const LatentBatch& z2, double t);

// Rowwise weighted sum over aligned batches; weights must sum to 1.
LatentBatch npoint_combine(std::span<const LatentBatch> zs, std::span<const double> weights);

// One perturbed copy per row: base + eps*u, u from the prior's component law.
// Distinct salts give independent perturbation sets for the same seed.
LatentBatch vicinity_batch(const LatentBatch& base, const PriorSpec& prior, double eps,
                           std::uint64_t seed, std::uint64_t salt = 0);

// Rowwise z3 + (z2 - z1).
LatentBatch analogy_batch(const LatentBatch& z1, const LatentBatch& z2,
                          const LatentBatch& z3);

// Rowwise spherical interpolation, t=0 -> z1 row.
LatentBatch slerp_pairs(const LatentBatch& z1, const LatentBatch& z2, double t);

// Walks every row of `start` independently; returns (steps+1)*n rows grouped
// step-major (block s holds all walkers after s steps). Row w of block s
// equals ops::random_walk(start.row(w), ..., walker=w) row s.
LatentBatch walk_batch(const LatentBatch& start, double eps, std::size_t steps,
                       bool matched, const PriorSpec& prior, std::uint64_t seed);

// Entrywise map application.
LatentBatch apply_map(const LatentBatch& batch, const TransportMap1D& map);

// Per-row sum of squares.
std::vector<double> squared_norms(const LatentBatch& batch);

// Deterministic chunked reduction (partials combined in chunk order).
double sum(std::span<const double> values);

struct MeanVar {
    double mean;
    double var;  // unbiased
};
MeanVar mean_var(std::span<const double> values);

// Equal-width bin counts over [lo, hi); the right edge belongs to the last
// bin. Out-of-range values land in underflow/overflow.
struct BinCounts {
    std::vector<std::uint64_t> counts;
    std::uint64_t underflow = 0;
    std::uint64_t overflow = 0;
};
BinCounts histogram_counts(std::span<const double> values, std::size_t bins,
                           double lo, double hi);

}  // namespace lt::kernels

// Plain serial reference implementations. Sampling follows the same chunk
// stream contract (results are bit-identical to the kernels); reductions
// accumulate naively and agree within rounding.
namespace lt::ref {

LatentBatch sample_batch(const PriorSpec& prior, std::size_t n, std::uint64_t seed,
                         std::uint64_t salt = 0);
std::vector<double> sample_op_scalar(const OperationSpec& op, const PriorSpec& prior,
                                     std::size_t n, std::uint64_t seed);
LatentBatch interpolate_pairs(const LatentBatch& z1, const LatentBatch& z2, double t);
LatentBatch npoint_combine(std::span<const LatentBatch> zs, std::span<const double> weights);
LatentBatch vicinity_batch(const LatentBatch& base, const PriorSpec& prior, double eps,
                           std::uint64_t seed, std::uint64_t salt = 0);
LatentBatch analogy_batch(const LatentBatch& z1, const LatentBatch& z2,
                          const LatentBatch& z3);
LatentBatch slerp_pairs(const LatentBatch& z1, const LatentBatch& z2, double t);
LatentBatch walk_batch(const LatentBatch& start, double eps, std::size_t steps,
                       bool matched, const PriorSpec& prior, std::uint64_t seed);
LatentBatch apply_map(const LatentBatch& batch, const TransportMap1D& map);
std::vector<double> squared_norms(const LatentBatch& batch);
double sum(std::span<const double> values);
kernels::MeanVar mean_var(std::span<const double> values);
kernels::BinCounts histogram_counts(std::span<const double> values, std::size_t bins,
                                    double lo, double hi);

}  // namespace lt::ref
