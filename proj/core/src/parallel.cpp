#include "nanoread/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace nanoread {

int default_thread_count() {
    const char* env = std::getenv("NANOREAD_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
    return int(v);
}

void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& fn) {
    if (chunk_size == 0) throw std::invalid_argument("chunk size must be positive");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    const std::uint64_t chunks = chunk_count(total, chunk_size);
    if (threads == 1 || chunks <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            std::uint64_t begin = c * chunk_size;
            fn(begin, std::min(total, begin + chunk_size), std::size_t(c));
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            std::uint64_t begin = c * chunk_size;
            fn(begin, std::min(total, begin + chunk_size), std::size_t(c));
        }
    };
    std::vector<std::thread> pool;
    int count = int(std::min<std::uint64_t>(threads, chunks));
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step over seed + golden-ratio stride.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace nanoread
