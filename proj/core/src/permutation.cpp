#include "nanoread/permutation.hpp"

#include <stdexcept>

namespace nanoread {

void PermSpec::validate() const {
    if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
    if (p < 1) throw std::invalid_argument("permutation needs p >= 1");
    if (ell < 2) throw std::invalid_argument("permutation needs ell >= 2");
}

IndexMap::IndexMap(std::vector<int> fwd) : fwd_(std::move(fwd)) {
    std::vector<char> seen(fwd_.size(), 0);
    for (int v : fwd_) {
        if (v < 0 || v >= int(fwd_.size()) || seen[v]) {
            throw std::invalid_argument("index map is not a permutation");
        }
        seen[v] = 1;
    }
}

IndexMap IndexMap::inverse() const {
    std::vector<int> inv(fwd_.size());
    for (int i = 0; i < int(fwd_.size()); ++i) inv[fwd_[i]] = i;
    return IndexMap(std::move(inv));
}

std::string IndexMap::to_string() const {
    std::string out;
    for (int i = 0; i < int(fwd_.size()); ++i) {
        if (i) out += ',';
        out += std::to_string(fwd_[i] + 1);
    }
    return out;
}

IndexMap f_pi(const PermSpec& spec) {
    spec.validate();
    const int cp = spec.col_pairs();
    const int covered = spec.covered_len();
    std::vector<int> fwd(spec.n, -1);
    std::vector<char> used(spec.n, 0);
    for (int q = 0; q < covered; ++q) {
        int g = q / (2 * spec.p);  // 2p-block index: row block i, column pair j
        int o = q % (2 * spec.p);
        int i = g / cp;
        int j = g % cp;
        int k = o / 2;  // row inside the p x 2 sub-block
        int c = o % 2;
        int src = (i * spec.p + k) * spec.ell + 2 * j + c;
        fwd[q] = src;
        used[src] = 1;
    }
    int q = covered;
    for (int src = 0; src < spec.n; ++src) {
        if (!used[src]) fwd[q++] = src;
    }
    return IndexMap(std::move(fwd));
}

BinaryWord apply_pi(const BinaryWord& x, const PermSpec& spec) {
    if (int(x.size()) != spec.n) {
        throw std::invalid_argument("word length " + std::to_string(x.size()) +
                                    " does not match spec n = " + std::to_string(spec.n));
    }
    IndexMap f = f_pi(spec);
    BinaryWord y = BinaryWord::zeros(x.size());
    for (int i = 0; i < f.size(); ++i) y[i] = x[f[i]];
    return y;
}

BinaryWord invert_pi(const BinaryWord& y, const PermSpec& spec) {
    if (int(y.size()) != spec.n) {
        throw std::invalid_argument("word length " + std::to_string(y.size()) +
                                    " does not match spec n = " + std::to_string(spec.n));
    }
    IndexMap f = f_pi(spec);
    BinaryWord x = BinaryWord::zeros(y.size());
    for (int i = 0; i < f.size(); ++i) x[f[i]] = y[i];
    return x;
}

}  // namespace nanoread
