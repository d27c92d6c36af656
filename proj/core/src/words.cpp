#include "nanoread/words.hpp"

#include <numeric>
#include <stdexcept>

namespace nanoread {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) {
            throw std::invalid_argument("binary word has symbol " +
                                        std::to_string(int(bits_[i])) + " at position " +
                                        std::to_string(i + 1) + ", expected 0 or 1");
        }
    }
}

BinaryWord BinaryWord::zeros(std::size_t n) {
    BinaryWord w;
    w.bits_.assign(n, 0);
    return w;
}

BinaryWord BinaryWord::from_string(std::string_view s) {
    BinaryWord w;
    w.bits_.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') {
            throw std::invalid_argument(std::string("bad character '") + s[i] +
                                        "' at position " + std::to_string(i + 1) +
                                        " of binary word \"" + std::string(s) + "\"");
        }
        w.bits_.push_back(s[i] == '1');
    }
    return w;
}

BinaryWord BinaryWord::from_uint(std::uint64_t value, std::size_t n) {
    if (n > 64) throw std::invalid_argument("from_uint supports at most 64 bits");
    BinaryWord w = zeros(n);
    for (std::size_t i = 0; i < n; ++i) w.bits_[i] = (value >> i) & 1;
    return w;
}

std::uint64_t BinaryWord::to_uint() const {
    if (size() > 64) throw std::invalid_argument("word too long for to_uint");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < size(); ++i) v |= std::uint64_t(bits_[i]) << i;
    return v;
}

std::string BinaryWord::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) s[i] = char('0' + bits_[i]);
    return s;
}

int BinaryWord::weight() const {
    return std::accumulate(bits_.begin(), bits_.end(), 0);
}

BinaryWord operator^(const BinaryWord& a, const BinaryWord& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("xor of words with different lengths " +
                                    std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
    }
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return BinaryWord(std::move(out));
}

}  // namespace nanoread
