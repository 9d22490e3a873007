#pragma once

#include <cstdint>
#include <cmath>

// Deterministic random streams for Monte-Carlo work.
//
// Generator: xoshiro256++ with state derived from (seed, stream) through the
// splitmix64 finalizer. Every consumer of randomness derives its own stream
// key, so results are independent of thread count and evaluation order.
// Sequences are fixed per build; cross-platform bit equality is not promised.

namespace lt {

namespace detail {

// splitmix64 finalizer; also used as a general 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// Builds a stream key by absorbing up to three indices (chunk, step, walker,
// ...) under a tag that keeps unrelated consumers on disjoint streams.
constexpr std::uint64_t stream_key(std::uint64_t tag, std::uint64_t a,
                                   std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = detail::mix64(tag);
    h = detail::mix64(h ^ detail::rotl(a + 0x6A09E667F3BCC909ULL, 17));
    h = detail::mix64(h ^ detail::rotl(b + 0xBB67AE8584CAA73BULL, 31));
    h = detail::mix64(h ^ detail::rotl(c + 0x3C6EF372FE94F82BULL, 47));
    return h;
}

// Stream tags. Values are arbitrary but fixed.
inline constexpr std::uint64_t kStreamSample      = 0x5A4D504CULL;  // batch sampling chunks
inline constexpr std::uint64_t kStreamVicinity    = 0x56494349ULL;  // batch vicinity (salt, chunk)
inline constexpr std::uint64_t kStreamVicinityRow = 0x56524F57ULL;  // single-row vicinity draws
inline constexpr std::uint64_t kStreamWalk        = 0x57414C4BULL;  // (step, walker) draws
inline constexpr std::uint64_t kStreamMap         = 0x4D415042ULL;  // empirical map construction

class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = detail::mix64(seed ^ 0x8000000080003FFFULL) ^
                           detail::rotl(detail::mix64(stream), 29);
        for (auto& s : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            s = detail::mix64(sm);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double next_unit_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [-a, a).
    double next_uniform_sym(double a) { return a * (2.0 * next_unit() - 1.0); }

    // N(0, sigma^2) via Box-Muller, second value cached.
    double next_normal(double sigma) {
        if (have_cached_) {
            have_cached_ = false;
            return sigma * cached_;
        }
        const double u1 = next_unit_pos();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return sigma * r * std::cos(theta);
    }

private:
    std::uint64_t state_[4];
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace lt
