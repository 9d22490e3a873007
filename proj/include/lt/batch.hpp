#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace lt {

// Dense n x d matrix of latent samples, row-major, one sample per row.
class LatentBatch {
public:
    LatentBatch(std::size_t n, std::size_t d) : n_(n), d_(d), data_(n * d, 0.0) {
        if (n == 0 || d == 0) throw std::invalid_argument("LatentBatch: n and d must be >= 1");
    }

    std::size_t rows() const { return n_; }
    std::size_t dim() const { return d_; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * d_, d_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * d_, d_}; }

    double& at(std::size_t i, std::size_t j) { return data_[i * d_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * d_ + j]; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    // Copy of column j; used for per-component statistics.
    std::vector<double> column(std::size_t j) const {
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = data_[i * d_ + j];
        return out;
    }

    bool operator==(const LatentBatch& other) const = default;

private:
    std::size_t n_, d_;
    std::vector<double> data_;
};

}  // namespace lt
