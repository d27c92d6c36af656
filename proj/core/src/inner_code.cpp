#include "nanoread/inner_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace nanoread {

InnerCode InnerCode::identity(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("identity code needs length at least 1");
    return InnerCode(InnerKind::Identity, n, n, 0);
}

InnerCode InnerCode::repetition(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("repetition code needs length at least 1");
    return InnerCode(InnerKind::Repetition, n, 1, (n - 1) / 2);
}

InnerCode InnerCode::bch(int m, int t, std::uint32_t shorten) {
    auto code = std::make_shared<const BchCode>(m, t, shorten);
    InnerCode out(InnerKind::Bch, code->length(), code->dimension(),
                  std::uint32_t(code->design_t()));
    out.bch_ = std::move(code);
    return out;
}

std::string InnerCode::describe() const {
    switch (kind_) {
        case InnerKind::Identity:
            return "identity(" + std::to_string(n_) + ")";
        case InnerKind::Repetition:
            return "repetition(" + std::to_string(n_) + ")";
        case InnerKind::Bch:
            return "bch(" + std::to_string(n_) + "," + std::to_string(k_) +
                   ",t=" + std::to_string(t_) + ")";
    }
    return "?";
}

BinaryWord InnerCode::encode(const BinaryWord& message) const {
    if (message.size() != k_) {
        throw std::invalid_argument("message length " + std::to_string(message.size()) +
                                    " does not match code dimension " + std::to_string(k_));
    }
    switch (kind_) {
        case InnerKind::Identity:
            return message;
        case InnerKind::Repetition: {
            std::vector<std::uint8_t> bits(n_, message[0]);
            return BinaryWord(std::move(bits));
        }
        case InnerKind::Bch:
            return bch_->encode(message);
    }
    throw std::logic_error("unreachable inner code kind");
}

InnerCode::Decoded InnerCode::decode(const BinaryWord& received) const {
    if (received.size() != n_) {
        throw std::invalid_argument("received length " + std::to_string(received.size()) +
                                    " does not match code length " + std::to_string(n_));
    }
    Decoded out;
    switch (kind_) {
        case InnerKind::Identity:
            out.ok = true;
            out.codeword = received;
            out.message = received;
            return out;
        case InnerKind::Repetition: {
            const std::uint32_t ones =
                std::uint32_t(std::count(received.begin(), received.end(), 1));
            const std::uint32_t zeros = n_ - ones;
            if (ones == zeros) return out;  // even length, split vote
            const std::uint8_t bit = ones > zeros ? 1 : 0;
            out.ok = true;
            out.codeword = BinaryWord(std::vector<std::uint8_t>(n_, bit));
            out.message = BinaryWord(std::vector<std::uint8_t>{bit});
            out.corrections = std::min(ones, zeros);
            return out;
        }
        case InnerKind::Bch: {
            BchCode::DecodeResult r = bch_->decode(received);
            out.ok = r.ok;
            if (r.ok) {
                out.codeword = std::move(r.codeword);
                out.message = std::move(r.message);
                out.corrections = r.corrections;
            }
            return out;
        }
    }
    throw std::logic_error("unreachable inner code kind");
}

std::uint32_t InnerCode::min_distance_exhaustive() const {
    if (k_ > 22) {
        throw std::invalid_argument("minimum-distance scan over 2^" + std::to_string(k_) +
                                    " messages refused; dimension cap is 22");
    }
    std::uint32_t best = n_ + 1;
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << k_); ++v) {
        const BinaryWord cw = encode(BinaryWord::from_uint(v, k_));
        best = std::min(best, std::uint32_t(cw.weight()));
    }
    return best;
}

}  // namespace nanoread
