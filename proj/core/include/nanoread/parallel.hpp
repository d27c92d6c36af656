#pragma once

#include <cstdint>
#include <functional>

namespace nanoread {

// NANOREAD_THREADS if set and valid, otherwise 1. Worker counts never change
// computed results, only wall time, so the conservative default is fine.
int default_thread_count();

// Splits [0, total) into fixed-size chunks and runs fn(begin, end, chunk_index)
// across the given number of threads. Chunk boundaries depend only on total and
// chunk_size, so per-chunk results are reproducible for any thread count.
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& fn);

inline std::uint64_t chunk_count(std::uint64_t total, std::uint64_t chunk_size) {
    return (total + chunk_size - 1) / chunk_size;
}

// Fixed 64-bit mixer used to derive independent per-chunk RNG seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace nanoread
