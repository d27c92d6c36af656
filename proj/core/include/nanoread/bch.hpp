#pragma once

#include <cstdint>
#include <vector>

#include "nanoread/gf2m.hpp"
#include "nanoread/words.hpp"

namespace nanoread {

// Binary BCH code of designed distance 2t+1 over GF(2^m), primitive length
// 2^m - 1, optionally shortened by fixing the top `shorten` message bits to
// zero and dropping them.  Encoding is systematic: word positions 1..(n-k)
// carry parity, positions (n-k+1)..n carry the message.
class BchCode {
public:
    BchCode(int m, int t, std::uint32_t shorten = 0);

    int field_degree() const { return field_.degree(); }
    int design_t() const { return t_; }
    std::uint32_t length() const { return n_; }
    std::uint32_t dimension() const { return k_; }
    std::uint32_t redundancy() const { return n_ - k_; }
    // Generator polynomial coefficients, ascending degree, over GF(2).
    const std::vector<std::uint8_t>& generator() const { return gen_; }

    BinaryWord encode(const BinaryWord& message) const;

    struct DecodeResult {
        bool ok = false;
        BinaryWord codeword;
        BinaryWord message;
        std::uint32_t corrections = 0;
    };
    // Bounded-distance decoding: corrects up to t substitutions and reports
    // failure (ok = false) when the syndrome leads outside that radius.
    DecodeResult decode(const BinaryWord& received) const;

    bool is_codeword(const BinaryWord& w) const;

private:
    std::vector<std::uint32_t> syndromes(const BinaryWord& r) const;

    FieldContext field_;
    int t_ = 0;
    std::uint32_t n_full_ = 0;  // 2^m - 1
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<std::uint8_t> gen_;
};

}  // namespace nanoread
