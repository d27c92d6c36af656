#include "nanoread/clique_cover.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "nanoread/parallel.hpp"

namespace nanoread {

namespace {

constexpr int kMaxVerifyN = 16;

}  // namespace

void CoverParams::validate() const {
    perm().validate();
    if (t < 1) throw std::invalid_argument("cover needs t >= 1");
    if (p > 10) throw std::invalid_argument("cover blocks are limited to p <= 10");
    if (m() < 1) {
        throw std::invalid_argument("n = " + std::to_string(n) + " yields no complete block for p = " +
                                    std::to_string(p) + ", ell = " + std::to_string(ell));
    }
}

bool CliqueKey::operator<(const CliqueKey& o) const {
    return std::tie(level, positions, orientations, fillers, free_suffix, tail) <
           std::tie(o.level, o.positions, o.orientations, o.fillers, o.free_suffix, o.tail);
}

std::string CliqueKey::to_string(int p) const {
    std::string s = "level=" + std::to_string(level) + " positions=";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) s += '/';
        s += std::to_string(positions[i]);
        s += (orientations[i] ? ":10" : ":01");
    }
    if (positions.empty()) s += '-';
    s += " fillers=";
    for (std::size_t i = 0; i < fillers.size(); ++i) {
        if (i) s += '/';
        s += block_to_string(fillers[i], p);
    }
    if (fillers.empty()) s += '-';
    if (!free_suffix.empty()) s += " free=" + free_suffix.to_string();
    if (!tail.empty()) s += " tail=" + tail.to_string();
    return s;
}

CliqueKey assign_clique(const BinaryWord& x, const CoverParams& params) {
    params.validate();
    if (int(x.size()) != params.n) {
        throw std::invalid_argument("word length " + std::to_string(x.size()) +
                                    " does not match n = " + std::to_string(params.n));
    }
    const int m = params.m();
    const int p = params.p;
    const BinaryWord y = apply_pi(x, params.perm());

    std::vector<std::uint32_t> blocks(m);
    std::vector<BlockClass> cls(m);
    for (int g = 0; g < m; ++g) {
        blocks[g] = pack_block(y, 2 * p * g, p);
        cls[g] = classify_block(blocks[g], p);
    }

    std::vector<int> alternating;
    for (int g = 0; g < m; ++g) {
        if (cls[g].alternating) alternating.push_back(g + 1);
    }
    const int level = std::min<int>(int(alternating.size()), params.t);

    CliqueKey key;
    key.level = level;
    key.positions.assign(alternating.begin(), alternating.begin() + level);
    for (int pos : key.positions) {
        key.orientations.push_back(cls[pos - 1].family == BlockFamily::Alt10);
    }
    const int last = level > 0 ? key.positions.back() : 0;
    const bool full = level == params.t;
    // Plain blocks become fillers; at full level everything after the last
    // designated block is captured verbatim instead.
    const int filler_end = full ? last : m;
    for (int g = 1; g <= filler_end; ++g) {
        bool designated = std::binary_search(key.positions.begin(), key.positions.end(), g);
        if (!designated) key.fillers.push_back(blocks[g - 1]);
    }
    if (full && last < m) {
        key.free_suffix = BinaryWord::zeros(std::size_t(2) * p * (m - last));
        for (int i = 0; i < int(key.free_suffix.size()); ++i) {
            key.free_suffix[i] = y[2 * p * last + i];
        }
    }
    const int covered = params.covered_len();
    key.tail = BinaryWord::zeros(params.n - covered);
    for (int i = covered; i < params.n; ++i) key.tail[i - covered] = y[i];
    return key;
}

std::vector<BinaryWord> clique_members(const CliqueKey& key, const CoverParams& params) {
    params.validate();
    const int m = params.m();
    const int p = params.p;
    const int level = key.level;
    if (level < 0 || level > params.t || level > m) {
        throw std::invalid_argument("clique level " + std::to_string(level) + " outside 0..min(t, m)");
    }
    if (int(key.positions.size()) != level || int(key.orientations.size()) != level) {
        throw std::invalid_argument("clique key needs one position and orientation per level");
    }
    for (int i = 0; i < level; ++i) {
        if (key.positions[i] < 1 || key.positions[i] > m ||
            (i > 0 && key.positions[i] <= key.positions[i - 1])) {
            throw std::invalid_argument("clique positions must be ascending inside 1..m");
        }
    }
    const bool full = level == params.t;
    const int last = level > 0 ? key.positions.back() : 0;
    const int filler_count = full ? last - level : m - level;
    if (int(key.fillers.size()) != filler_count) {
        throw std::invalid_argument("clique key carries " + std::to_string(key.fillers.size()) +
                                    " fillers, expected " + std::to_string(filler_count));
    }
    const int suffix_bits = full ? 2 * p * (m - last) : 0;
    if (int(key.free_suffix.size()) != suffix_bits) {
        throw std::invalid_argument("clique key free suffix must hold " +
                                    std::to_string(suffix_bits) + " bits");
    }
    if (int(key.tail.size()) != params.n - params.covered_len()) {
        throw std::invalid_argument("clique key tail must hold " +
                                    std::to_string(params.n - params.covered_len()) + " bits");
    }
    for (std::uint32_t f : key.fillers) {
        if (classify_block(f, p).alternating) {
            throw std::invalid_argument("clique filler " + block_to_string(f, p) +
                                        " is an alternating block");
        }
    }

    // Walk the designated index tuple (h_1..h_level) in odometer order.
    std::vector<BinaryWord> members;
    std::vector<int> h(level, 1);
    const PermSpec spec = params.perm();
    for (;;) {
        BinaryWord y = BinaryWord::zeros(params.n);
        int fill = 0;
        int designated = 0;
        for (int g = 1; g <= m; ++g) {
            std::uint32_t block;
            if (designated < level && key.positions[designated] == g) {
                block = lambda_block(p, key.orientations[designated] ? BlockFamily::Alt10
                                                                     : BlockFamily::Alt01,
                                     h[designated]);
                ++designated;
            } else if (full && g > last) {
                break;  // free suffix takes over
            } else {
                block = key.fillers[fill++];
            }
            unpack_block(block, p, y, 2 * p * (g - 1));
        }
        if (full) {
            for (int i = 0; i < int(key.free_suffix.size()); ++i) {
                y[2 * p * last + i] = key.free_suffix[i];
            }
        }
        for (int i = 0; i < int(key.tail.size()); ++i) y[params.covered_len() + i] = key.tail[i];
        members.push_back(invert_pi(y, spec));

        int pos = level - 1;
        while (pos >= 0 && h[pos] == p) h[pos--] = 1;
        if (pos < 0) break;
        ++h[pos];
    }
    return members;
}

CoverReport verify_cover(const CoverParams& params, int threads) {
    params.validate();
    if (params.n > kMaxVerifyN) {
        throw std::invalid_argument("verify_cover walks all 2^n words and allows n <= " +
                                    std::to_string(kMaxVerifyN) + ", got n = " +
                                    std::to_string(params.n));
    }
    if (threads < 1) throw std::invalid_argument("thread count must be positive");

    CoverReport report;
    report.params = params;
    report.words = std::uint64_t(1) << params.n;

    // Pass 1: assign every word, remember the distinct keys and the smallest
    // word whose clique fails to contain it.
    const std::uint64_t chunk = 4096;
    const std::size_t chunks = chunk_count(report.words, chunk);
    std::vector<std::set<CliqueKey>> chunk_keys(chunks);
    std::vector<std::optional<std::uint64_t>> chunk_bad(chunks);
    parallel_chunks(report.words, chunk, threads,
                    [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
                        for (std::uint64_t v = begin; v < end; ++v) {
                            BinaryWord x = BinaryWord::from_uint(v, params.n);
                            CliqueKey key = assign_clique(x, params);
                            std::vector<BinaryWord> members = clique_members(key, params);
                            if (std::find(members.begin(), members.end(), x) == members.end()) {
                                if (!chunk_bad[slot]) chunk_bad[slot] = v;
                            }
                            chunk_keys[slot].insert(std::move(key));
                        }
                    });
    std::set<CliqueKey> keys;
    for (auto& part : chunk_keys) keys.merge(part);
    report.membership_ok = true;
    for (std::size_t c = 0; c < chunks; ++c) {
        if (chunk_bad[c]) {
            report.membership_ok = false;
            report.unassigned = BinaryWord::from_uint(*chunk_bad[c], params.n);
            break;
        }
    }
    report.distinct_cliques = keys.size();

    // Pass 2: pairwise read distances inside each clique, capped per level.
    std::vector<const CliqueKey*> ordered;
    ordered.reserve(keys.size());
    for (const CliqueKey& k : keys) ordered.push_back(&k);
    struct PairSlot {
        std::uint64_t clique = ~std::uint64_t(0);
        std::pair<BinaryWord, BinaryWord> pair;
        int dist = 0;
    };
    const std::size_t pair_chunks = chunk_count(ordered.size(), 64);
    std::vector<int> chunk_max(pair_chunks, 0);
    std::vector<PairSlot> chunk_violation(pair_chunks);  // earliest over-cap pair per chunk
    std::vector<std::map<int, int>> chunk_level_max(pair_chunks);
    std::vector<std::map<int, std::uint64_t>> chunk_level_count(pair_chunks);
    parallel_chunks(ordered.size(), 64, threads,
                    [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
                        for (std::uint64_t ci = begin; ci < end; ++ci) {
                            const CliqueKey& key = *ordered[ci];
                            ++chunk_level_count[slot][key.level];
                            std::vector<BinaryWord> members = clique_members(key, params);
                            std::vector<ReadVector> reads;
                            reads.reserve(members.size());
                            for (const BinaryWord& w : members) {
                                reads.push_back(read_vector(w, params.ell));
                            }
                            const int cap = 2 * key.level;
                            for (std::size_t i = 0; i < reads.size(); ++i) {
                                for (std::size_t j = i + 1; j < reads.size(); ++j) {
                                    int d = hamming_distance(reads[i], reads[j]);
                                    auto& lvl = chunk_level_max[slot][key.level];
                                    lvl = std::max(lvl, d);
                                    chunk_max[slot] = std::max(chunk_max[slot], d);
                                    if (d > cap && ci < chunk_violation[slot].clique) {
                                        chunk_violation[slot] =
                                            PairSlot{ci, {members[i], members[j]}, d};
                                    }
                                }
                            }
                        }
                    });

    report.distance_ok = true;
    PairSlot violation;
    for (std::size_t c = 0; c < pair_chunks; ++c) {
        report.max_pair_distance = std::max(report.max_pair_distance, chunk_max[c]);
        if (chunk_violation[c].clique < violation.clique) violation = chunk_violation[c];
        for (auto [lvl, d] : chunk_level_max[c]) {
            auto& slot = report.max_distance_per_level[lvl];
            slot = std::max(slot, d);
        }
        for (auto [lvl, cnt] : chunk_level_count[c]) report.cliques_per_level[lvl] += cnt;
    }
    if (violation.clique != ~std::uint64_t(0)) {
        report.distance_ok = false;
        report.counterexample = violation.pair;
    }
    if (report.max_pair_distance > 2 * params.t) report.distance_ok = false;
    return report;
}

PairCheckReport clique_pair_distance_check(int s, int p, int ell, int trials,
                                           std::uint64_t seed) {
    if (s < 1) throw std::invalid_argument("pair check needs s >= 1");
    if (p < 2) throw std::invalid_argument("pair check needs p >= 2 so a family has two blocks");
    if (ell < 2) throw std::invalid_argument("pair check needs ell >= 2");
    if (trials < 1) throw std::invalid_argument("pair check needs trials >= 1");

    std::mt19937_64 rng(seed);
    PairCheckReport report;
    report.trials = trials;
    report.cap = 2 * s;

    auto random_plain_block = [&]() {
        const std::uint32_t span = std::uint32_t(1) << (2 * p);
        for (;;) {
            std::uint32_t b = std::uint32_t(rng() % span);
            if (!classify_block(b, p).alternating) return b;
        }
    };

    for (int trial = 0; trial < trials; ++trial) {
        const int cp = ell / 2;
        int min_rows = (s + cp - 1) / cp;
        int rows = min_rows + int(rng() % 2);
        int m = rows * cp;
        int n = rows * p * ell + int(rng() % std::uint64_t(p * ell));
        PermSpec spec{n, p, ell};

        // Shared scaffold: plain blocks everywhere, shared tail.
        std::vector<int> positions(m);
        for (int g = 0; g < m; ++g) positions[g] = g + 1;
        std::shuffle(positions.begin(), positions.end(), rng);
        positions.resize(s);
        std::sort(positions.begin(), positions.end());

        BinaryWord ya = BinaryWord::zeros(n);
        for (int i = spec.covered_len(); i < n; ++i) ya[i] = rng() & 1;
        int designated = 0;
        for (int g = 1; g <= m; ++g) {
            if (designated < s && positions[designated] == g) {
                ++designated;
                continue;
            }
            unpack_block(random_plain_block(), p, ya, 2 * p * (g - 1));
        }
        BinaryWord yb = ya;
        for (int i = 0; i < s; ++i) {
            BlockFamily family = (rng() & 1) ? BlockFamily::Alt10 : BlockFamily::Alt01;
            int ha = 1 + int(rng() % p);
            int hb = 1 + int(rng() % (p - 1));
            if (hb >= ha) ++hb;  // distinct switch points in the same family
            unpack_block(lambda_block(p, family, ha), p, ya, 2 * p * (positions[i] - 1));
            unpack_block(lambda_block(p, family, hb), p, yb, 2 * p * (positions[i] - 1));
        }
        BinaryWord xa = invert_pi(ya, spec);
        BinaryWord xb = invert_pi(yb, spec);
        int d = hamming_distance(read_vector(xa, ell), read_vector(xb, ell));
        if (d > report.max_distance) {
            report.max_distance = d;
            report.worst = std::make_pair(xa, xb);
        }
    }
    report.ok = report.max_distance <= report.cap;
    return report;
}

}  // namespace nanoread
