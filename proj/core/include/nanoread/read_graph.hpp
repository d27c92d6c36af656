#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "nanoread/words.hpp"

namespace nanoread {

// Confusability graph on all 2^n words: an edge joins two distinct words whose
// read vectors are at Hamming distance <= 2t. Independent sets are exactly the
// codes that survive t substitutions.
struct ReadGraph {
    int n = 0;
    int ell = 0;
    int t = 0;
    std::uint32_t order = 0;
    int stride = 0;                   // 64-bit words per adjacency row
    std::vector<std::uint64_t> adj;   // order * stride bit matrix

    bool adjacent(std::uint32_t a, std::uint32_t b) const {
        return (adj[std::size_t(a) * stride + b / 64] >> (b % 64)) & 1;
    }
    std::uint64_t degree(std::uint32_t v) const;
    std::uint64_t edge_count() const;
};

constexpr int kMaxGraphN = 14;  // 2^14 x 2^14 bits = 32 MiB of adjacency
constexpr int kMaxExactMisN = 12;

ReadGraph build_read_graph(int n, int ell, int t);

struct MisResult {
    bool exact = true;
    mpz_class size;
    // Maximum (exact) or maximal (greedy) independent set; left empty for the
    // t = 0 shortcut where every word qualifies.
    std::vector<BinaryWord> witness;
};

// Exact via branch and bound up to kMaxExactMisN, greedy with exact=false up
// to kMaxGraphN, and the full 2^n shortcut for t = 0 at any n.
MisResult max_independent_set(int n, int ell, int t);

// Greedy baseline on an already built graph.
std::vector<std::uint32_t> greedy_independent_set(const ReadGraph& g);
// Exact solver on an already built graph (complement clique search).
std::vector<std::uint32_t> exact_independent_set(const ReadGraph& g);

}  // namespace nanoread
