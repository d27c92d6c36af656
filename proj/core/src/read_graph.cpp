#include "nanoread/read_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nanoread/read_vector.hpp"

namespace nanoread {

namespace {

// Read vectors packed four bits per symbol so the pair loop stays cheap.
// With n <= 14 and ell <= 13 the vector fits in two 64-bit words.
struct PackedRead {
    std::uint64_t lo = 0, hi = 0;
};

int packed_distance(const PackedRead& a, const PackedRead& b) {
    auto nibbles = [](std::uint64_t v) {
        v |= v >> 1;
        v |= v >> 2;
        v &= 0x1111111111111111ULL;
        return std::popcount(v);
    };
    return nibbles(a.lo ^ b.lo) + nibbles(a.hi ^ b.hi);
}

}  // namespace

std::uint64_t ReadGraph::degree(std::uint32_t v) const {
    std::uint64_t d = 0;
    for (int w = 0; w < stride; ++w) d += std::popcount(adj[std::size_t(v) * stride + w]);
    return d;
}

std::uint64_t ReadGraph::edge_count() const {
    std::uint64_t total = 0;
    for (std::uint32_t v = 0; v < order; ++v) total += degree(v);
    return total / 2;
}

ReadGraph build_read_graph(int n, int ell, int t) {
    if (n < 1 || n > kMaxGraphN) {
        throw std::invalid_argument("graph construction allows 1 <= n <= " +
                                    std::to_string(kMaxGraphN) + ", got n = " +
                                    std::to_string(n));
    }
    if (ell < 1 || ell > 13) throw std::invalid_argument("graph construction allows ell <= 13");
    if (t < 0) throw std::invalid_argument("graph needs t >= 0");

    ReadGraph g;
    g.n = n;
    g.ell = ell;
    g.t = t;
    g.order = std::uint32_t(1) << n;
    g.stride = int((g.order + 63) / 64);
    g.adj.assign(std::size_t(g.order) * g.stride, 0);

    const int len = n + ell - 1;
    std::vector<PackedRead> reads(g.order);
    for (std::uint32_t v = 0; v < g.order; ++v) {
        ReadVector r = read_vector(BinaryWord::from_uint(v, n), ell);
        PackedRead packed;
        for (int i = 0; i < len; ++i) {
            std::uint64_t sym = std::uint64_t(r[i]);
            if (i < 16) {
                packed.lo |= sym << (4 * i);
            } else {
                packed.hi |= sym << (4 * (i - 16));
            }
        }
        reads[v] = packed;
    }

    const int cap = 2 * t;
    for (std::uint32_t a = 0; a < g.order; ++a) {
        for (std::uint32_t b = a + 1; b < g.order; ++b) {
            if (packed_distance(reads[a], reads[b]) <= cap) {
                g.adj[std::size_t(a) * g.stride + b / 64] |= std::uint64_t(1) << (b % 64);
                g.adj[std::size_t(b) * g.stride + a / 64] |= std::uint64_t(1) << (a % 64);
            }
        }
    }
    return g;
}

std::vector<std::uint32_t> greedy_independent_set(const ReadGraph& g) {
    std::vector<std::uint64_t> alive(g.stride, 0);
    for (std::uint32_t v = 0; v < g.order; ++v) {
        alive[v / 64] |= std::uint64_t(1) << (v % 64);
    }
    std::vector<std::uint32_t> out;
    for (;;) {
        // Take a minimum-degree vertex of the residual graph.
        std::int64_t best_deg = -1;
        std::uint32_t best = 0;
        for (int w = 0; w < g.stride; ++w) {
            std::uint64_t bits = alive[w];
            while (bits) {
                std::uint32_t v = std::uint32_t(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                const std::uint64_t* r = g.adj.data() + std::size_t(v) * g.stride;
                std::int64_t d = 0;
                for (int u = 0; u < g.stride; ++u) d += std::popcount(r[u] & alive[u]);
                if (best_deg < 0 || d < best_deg) {
                    best_deg = d;
                    best = v;
                }
            }
        }
        if (best_deg < 0) break;
        out.push_back(best);
        const std::uint64_t* r = g.adj.data() + std::size_t(best) * g.stride;
        for (int u = 0; u < g.stride; ++u) alive[u] &= ~r[u];
        alive[best / 64] &= ~(std::uint64_t(1) << (best % 64));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Max clique on the complement graph with greedy colouring bounds. An
// independent set of g is a clique of the complement, which is sparse here
// because the read graph is dense for interesting t.
class CliqueSolver {
public:
    explicit CliqueSolver(const ReadGraph& g) : order_(g.order), stride_(g.stride) {
        comp_.assign(std::size_t(order_) * stride_, 0);
        for (std::uint32_t v = 0; v < order_; ++v) {
            for (int w = 0; w < stride_; ++w) {
                comp_[std::size_t(v) * stride_ + w] = ~g.adj[std::size_t(v) * stride_ + w];
            }
            // Clear the diagonal and the padding beyond `order_` vertices.
            clear_bit(row(v), v);
            for (std::uint32_t b = order_; b < std::uint32_t(stride_) * 64; ++b) {
                clear_bit(row(v), b);
            }
        }
    }

    std::vector<std::uint32_t> solve(std::vector<std::uint32_t> seed) {
        best_ = std::move(seed);
        std::vector<std::uint64_t> candidates(stride_, 0);
        for (std::uint32_t v = 0; v < order_; ++v) set_bit(candidates.data(), v);
        std::vector<std::uint32_t> current;
        expand(candidates, current);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::uint64_t* row(std::uint32_t v) { return comp_.data() + std::size_t(v) * stride_; }
    const std::uint64_t* row(std::uint32_t v) const {
        return comp_.data() + std::size_t(v) * stride_;
    }
    static void set_bit(std::uint64_t* bits, std::uint32_t b) {
        bits[b / 64] |= std::uint64_t(1) << (b % 64);
    }
    static void clear_bit(std::uint64_t* bits, std::uint32_t b) {
        bits[b / 64] &= ~(std::uint64_t(1) << (b % 64));
    }
    static bool test_bit(const std::uint64_t* bits, std::uint32_t b) {
        return (bits[b / 64] >> (b % 64)) & 1;
    }

    void expand(const std::vector<std::uint64_t>& candidates,
                std::vector<std::uint32_t>& current) {
        // Greedy colouring: vertices are binned into independent-in-complement
        // classes; a clique can take at most one vertex per class, which gives
        // the usual bound and a good branching order.
        std::vector<std::uint32_t> order;
        std::vector<int> bound;
        std::vector<std::uint64_t> uncoloured = candidates;
        std::vector<std::uint64_t> cls(stride_);
        int colour = 0;
        for (;;) {
            bool any = false;
            cls = uncoloured;
            ++colour;
            for (int w = 0; w < stride_; ++w) {
                std::uint64_t bits = cls[w];
                while (bits) {
                    std::uint32_t v = std::uint32_t(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                    if (!test_bit(cls.data(), v)) continue;
                    any = true;
                    order.push_back(v);
                    bound.push_back(colour);
                    clear_bit(uncoloured.data(), v);
                    // Vertices adjacent (in the complement) to v are pushed to
                    // a later colour class.
                    for (int u = 0; u < stride_; ++u) cls[u] &= ~row(v)[u];
                    bits &= cls[w];
                }
            }
            if (!any) break;
            bool empty = true;
            for (std::uint64_t wbits : uncoloured) empty &= wbits == 0;
            if (empty) break;
        }

        std::vector<std::uint64_t> local = candidates;
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (current.size() + bound[i] <= best_.size()) return;
            std::uint32_t v = order[i];
            current.push_back(v);
            std::vector<std::uint64_t> next(stride_);
            bool nonempty = false;
            for (int w = 0; w < stride_; ++w) {
                next[w] = local[w] & row(v)[w];
                nonempty |= next[w] != 0;
            }
            if (!nonempty) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            clear_bit(local.data(), v);
        }
    }

    std::uint32_t order_;
    int stride_;
    std::vector<std::uint64_t> comp_;
    std::vector<std::uint32_t> best_;
};

}  // namespace

std::vector<std::uint32_t> exact_independent_set(const ReadGraph& g) {
    if (g.n > kMaxExactMisN) {
        throw std::invalid_argument("exact search allows n <= " +
                                    std::to_string(kMaxExactMisN) + ", got n = " +
                                    std::to_string(g.n));
    }
    CliqueSolver solver(g);
    return solver.solve(greedy_independent_set(g));
}

MisResult max_independent_set(int n, int ell, int t) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    if (t < 0) throw std::invalid_argument("needs t >= 0");
    MisResult out;
    if (t == 0) {
        // Reads are injective, so no two words collide and all 2^n qualify.
        out.exact = true;
        out.size = 1;
        out.size <<= n;
        if (n <= kMaxExactMisN) {
            for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
                out.witness.push_back(BinaryWord::from_uint(v, n));
            }
        }
        return out;
    }
    if (n > kMaxGraphN) {
        throw std::invalid_argument("independent set search allows n <= " +
                                    std::to_string(kMaxGraphN) + " for t >= 1, got n = " +
                                    std::to_string(n));
    }
    ReadGraph g = build_read_graph(n, ell, t);
    std::vector<std::uint32_t> set;
    if (n <= kMaxExactMisN) {
        set = exact_independent_set(g);
        out.exact = true;
    } else {
        set = greedy_independent_set(g);
        out.exact = false;
    }
    out.size = (unsigned long)(set.size());
    for (std::uint32_t v : set) out.witness.push_back(BinaryWord::from_uint(v, n));
    return out;
}

}  // namespace nanoread
