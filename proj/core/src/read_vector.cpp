#include "nanoread/read_vector.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nanoread {

ReadVector::ReadVector(std::vector<int> symbols, int ell)
    : symbols_(std::move(symbols)), ell_(ell) {
    if (ell_ < 1) throw std::invalid_argument("read vector window must be >= 1");
    if (int(symbols_.size()) < ell_) {
        throw std::invalid_argument("read vector of window " + std::to_string(ell_) +
                                    " needs at least " + std::to_string(ell_) + " symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] < 0 || symbols_[i] > ell_) {
            throw std::invalid_argument("read symbol " + std::to_string(symbols_[i]) +
                                        " at position " + std::to_string(i + 1) +
                                        " outside 0.." + std::to_string(ell_));
        }
    }
}

ReadVector ReadVector::from_string(std::string_view csv, int ell) {
    std::vector<int> symbols;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view field = csv.substr(start, comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            throw std::invalid_argument("bad read symbol \"" + std::string(field) +
                                        "\" at position " + std::to_string(symbols.size() + 1));
        }
        symbols.push_back(value);
        if (comma == csv.size()) break;
        start = comma + 1;
    }
    return ReadVector(std::move(symbols), ell);
}

std::string ReadVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(symbols_[i]);
    }
    return out;
}

ReadVector read_vector(const BinaryWord& x, int ell) {
    if (ell < 1) throw std::invalid_argument("window must be >= 1");
    if (x.empty()) throw std::invalid_argument("word must be nonempty");
    const int n = int(x.size());
    std::vector<int> symbols(n + ell - 1);
    // Sliding window: r_i counts ones among x_{i-ell+1}..x_i, indices clipped to [1, n].
    int acc = 0;
    for (int i = 1; i <= n + ell - 1; ++i) {
        if (i <= n) acc += x[i - 1];
        if (i - ell >= 1) acc -= x[i - ell - 1];
        symbols[i - 1] = acc;
    }
    return ReadVector(std::move(symbols), ell);
}

BinaryWord mod2_prefix(const ReadVector& r, int n) {
    if (n < 1 || n > int(r.size())) {
        throw std::invalid_argument("prefix length " + std::to_string(n) +
                                    " outside 1.." + std::to_string(r.size()));
    }
    BinaryWord p = BinaryWord::zeros(n);
    for (int i = 0; i < n; ++i) p[i] = std::uint8_t(r[i] & 1);
    return p;
}

BinaryWord invert_parity(const BinaryWord& p, int ell) {
    if (ell < 1) throw std::invalid_argument("window must be >= 1");
    if (p.empty()) throw std::invalid_argument("parity word must be nonempty");
    const int n = int(p.size());
    BinaryWord x = BinaryWord::zeros(n);
    for (int i = 1; i <= n; ++i) {
        std::uint8_t prev = (i >= 2) ? p[i - 2] : 0;
        std::uint8_t wrap = (i - ell >= 1) ? x[i - ell - 1] : 0;
        x[i - 1] = p[i - 1] ^ prev ^ wrap;
    }
    return x;
}

EditOutcome apply_substitutions(const ReadVector& r, const SubstitutionPattern& pattern) {
    EditOutcome out{r, 0};
    std::vector<char> seen(r.size(), 0);
    for (const Edit& e : pattern.edits) {
        if (e.pos < 1 || e.pos > int(r.size())) {
            throw std::invalid_argument("edit position " + std::to_string(e.pos) +
                                        " outside 1.." + std::to_string(r.size()));
        }
        if (e.value < 0 || e.value > r.window()) {
            throw std::invalid_argument("edit value " + std::to_string(e.value) +
                                        " at position " + std::to_string(e.pos) +
                                        " outside 0.." + std::to_string(r.window()));
        }
        if (seen[e.pos - 1]) {
            throw std::invalid_argument("duplicate edit position " + std::to_string(e.pos));
        }
        seen[e.pos - 1] = 1;
        if (out.result[e.pos - 1] != e.value) ++out.effective;
        out.result[e.pos - 1] = e.value;
    }
    return out;
}

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming distance needs equal lengths, got " +
                                    std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
    }
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

int hamming_distance(const ReadVector& a, const ReadVector& b) {
    if (a.window() != b.window()) {
        throw std::invalid_argument("hamming distance across windows " +
                                    std::to_string(a.window()) + " and " +
                                    std::to_string(b.window()));
    }
    return hamming_distance(a.symbols(), b.symbols());
}

int hamming_distance(const BinaryWord& a, const BinaryWord& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming distance needs equal lengths, got " +
                                    std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
    }
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

CodeCheckResult is_t_sub_read_code(const std::vector<BinaryWord>& words, int ell, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    std::vector<ReadVector> reads;
    reads.reserve(words.size());
    for (const BinaryWord& w : words) {
        if (w.size() != words.front().size()) {
            throw std::invalid_argument("code words must share one length");
        }
        reads.push_back(read_vector(w, ell));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i] == words[j]) continue;
            int d = hamming_distance(reads[i], reads[j]);
            if (d <= 2 * t) {
                return {false, CodeCheckWitness{words[i], words[j], d}};
            }
        }
    }
    return {true, std::nullopt};
}

std::optional<BinaryWord> reconstruct_from_clean_read(const ReadVector& r) {
    const int ell = r.window();
    const int n = r.word_len();
    if (n < 1) return std::nullopt;
    BinaryWord x = BinaryWord::zeros(n);
    for (int i = 1; i <= n; ++i) {
        int prev = (i >= 2) ? r[i - 2] : 0;
        int wrap = (i - ell >= 1) ? x[i - ell - 1] : 0;
        int bit = r[i - 1] - prev + wrap;
        if (bit != 0 && bit != 1) return std::nullopt;
        x[i - 1] = std::uint8_t(bit);
    }
    // The scan pins the first n symbols; the trailing ell-1 must agree too.
    if (read_vector(x, ell) != r) return std::nullopt;
    return x;
}

}  // namespace nanoread
