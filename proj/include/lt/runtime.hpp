#pragma once

#include <cstddef>

namespace lt {

// Rows (or scalar values) per work chunk. Chunks define both the RNG stream
// granularity and the partial-sum granularity, so results do not depend on
// how many threads execute them.
inline constexpr std::size_t kChunk = 8192;

inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

struct ChunkRange {
    std::size_t begin;
    std::size_t end;
};

inline ChunkRange chunk_range(std::size_t n, std::size_t c) {
    const std::size_t b = c * kChunk;
    const std::size_t e = b + kChunk < n ? b + kChunk : n;
    return {b, e};
}

// Thread cap from the LT_THREADS environment variable; 0 means unlimited.
std::size_t thread_cap();

// Applies the LT_THREADS cap to the OpenMP runtime. Call once at startup.
void apply_thread_cap();

}  // namespace lt
