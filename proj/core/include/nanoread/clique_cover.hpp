#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nanoread/lambda_blocks.hpp"
#include "nanoread/permutation.hpp"
#include "nanoread/read_vector.hpp"

namespace nanoread {

struct CoverParams {
    int n = 0;
    int p = 0;
    int t = 0;
    int ell = 0;

    void validate() const;  // shape checks; enumeration guards live in the ops
    PermSpec perm() const { return PermSpec{n, p, ell}; }
    int m() const { return perm().block_count(); }
    int covered_len() const { return perm().covered_len(); }
};

// Canonical clique label. A word is assigned by interleaving it, scanning the
// m blocks of 2p symbols, and designating the first `level` alternating blocks
// (level caps at t). Blocks before the last designated one that are not
// designated must be plain (non-alternating) and are stored in fillers.
// At level t the image after the last designated block is unconstrained and
// kept verbatim in free_suffix; below t it consists of plain blocks that are
// part of fillers. tail holds the image positions past the covered prefix.
struct CliqueKey {
    int level = 0;
    std::vector<int> positions;               // 1-based block indices, ascending
    std::vector<std::uint8_t> orientations;   // 0 = 01-family, 1 = 10-family
    std::vector<std::uint32_t> fillers;
    BinaryWord free_suffix;
    BinaryWord tail;

    friend bool operator==(const CliqueKey&, const CliqueKey&) = default;
    bool operator<(const CliqueKey& o) const;
    std::string to_string(int p) const;
};

CliqueKey assign_clique(const BinaryWord& x, const CoverParams& params);
// All p^level member words, in ascending order of the designated index tuple.
std::vector<BinaryWord> clique_members(const CliqueKey& key, const CoverParams& params);

struct CoverReport {
    CoverParams params;
    std::uint64_t words = 0;
    std::uint64_t distinct_cliques = 0;
    bool membership_ok = false;
    bool distance_ok = false;
    int max_pair_distance = 0;
    std::map<int, int> max_distance_per_level;
    std::map<int, std::uint64_t> cliques_per_level;
    // Offending data when a check fails: a word outside its assigned clique,
    // or a member pair with read distance above the cap for its level.
    std::optional<BinaryWord> unassigned;
    std::optional<std::pair<BinaryWord, BinaryWord>> counterexample;

    bool ok() const { return membership_ok && distance_ok; }
};

// Exhaustive check over all 2^n words: every word lies in its assigned clique
// and every materialized clique has pairwise read distance <= 2*level (hence
// <= 2t). Refuses n > 16.
CoverReport verify_cover(const CoverParams& params, int threads = 1);

struct PairCheckReport {
    int trials = 0;
    int max_distance = 0;
    int cap = 0;  // 2s
    bool ok = false;
    std::optional<std::pair<BinaryWord, BinaryWord>> worst;
};

// Randomized check of the distance cap: draws pairs whose interleaved images
// agree outside s designated blocks and carry two different same-family
// alternating blocks in each of them; read distance must stay within 2s.
PairCheckReport clique_pair_distance_check(int s, int p, int ell, int trials,
                                           std::uint64_t seed);

// Number of cliques over the covered prefix (2pm positions), exactly.
mpz_class count_cliques_formula(int m, int p, int t);
// Same value by generating the label tuples one by one. Refuses inputs whose
// count exceeds an internal work limit.
mpz_class count_cliques_enumerate(int m, int p, int t);
// Cover size for full words: formula * 2^(n - 2pm) tails.
mpz_class cover_size(const CoverParams& params);

struct Log2Cover {
    double log2_total = 0;
    int p = 0;
    int m = 0;
    // Decomposition log2_total = base + series + rest, where base = n - (2p-1)t
    // and series is the log of the partial negative-binomial sum; unavailable
    // when m < t (the series is empty).
    double term_base = 0;
    std::optional<double> term_series;
    std::optional<double> term_rest;
};
Log2Cover log2_cover_size(const CoverParams& params);

struct BoundReport {
    int n = 0, t = 0, ell = 0, p = 0, m = 0;
    mpz_class cover_cliques;
    double log2_cover = 0;
    double bound = 0;       // n - log2_cover
    double t_log2_n = 0;
    double gap = 0;         // t_log2_n - bound
};
// Counting lower bound on the redundancy of any t-substitution read code,
// at p = ceil((1-epsilon)/2 * log2 n).
BoundReport redundancy_lower_bound(int n, int t, int ell, double epsilon);

struct S1Result {
    double value = 0;       // may underflow to 0 for large m
    double log2_value = 0;  // computed in log space, stable
};
// Head sum  sum_{i=0}^{s} C(m,i) lambda^(m-i) / 2^((2p-1)i)  with
// lambda = 1 - 2p/4^p.
S1Result partial_sum_s1(int s, long long m, int p);
// Truncated negative-binomial series  sum_{r=0}^{r_max} C(r+t-1, t-1) lambda^r.
double partial_sum_s2(long long r_max, int t, double lambda);

// log2 of a positive big integer, accurate to double precision.
double log2_mpz(const mpz_class& z);

}  // namespace nanoread
