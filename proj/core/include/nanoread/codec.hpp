#pragma once

#include <cstdint>

#include "nanoread/inner_code.hpp"
#include "nanoread/read_vector.hpp"
#include "nanoread/words.hpp"

namespace nanoread {

// End-to-end coding for the ell-window channel. A channel word x is read as
// the vector of sliding-window weights; reducing the first n read symbols
// mod 2 is a bijection onto parity words, and one read substitution moves at
// most one parity bit. Protecting the parity word with a code that corrects
// t substitutions therefore protects the read against t substitutions.
class Codec {
public:
    Codec(InnerCode inner, int ell);

    const InnerCode& inner() const { return inner_; }
    int ell() const { return ell_; }
    std::uint32_t length() const { return inner_.length(); }
    std::uint32_t dimension() const { return inner_.dimension(); }
    std::uint32_t redundancy() const { return inner_.redundancy(); }
    std::size_t read_len() const { return std::size_t(length()) + ell_ - 1; }

    // Channel word whose parity prefix is the inner encoding of message.
    BinaryWord encode(const BinaryWord& message) const;

    struct ReadDecode {
        bool ok = false;
        BinaryWord message;
        BinaryWord word;
        std::uint32_t parity_corrections = 0;
        // Hamming distance between the decoded word's read vector and the
        // input; -1 when decoding failed.
        int read_residual = -1;
    };
    ReadDecode decode_read(const ReadVector& r) const;

private:
    InnerCode inner_;
    int ell_ = 0;
};

struct SimReport {
    std::uint64_t trials = 0;
    int weight = 0;
    std::uint64_t decode_ok = 0;
    std::uint64_t success = 0;     // message came back bit for bit
    std::uint64_t miscorrect = 0;  // decoder said ok but the message is wrong
    std::uint64_t fail = 0;        // decoder flagged failure
    std::uint64_t max_corrections = 0;
    double success_rate = 0.0;
};

// Monte Carlo over random messages and random weight-`weight` read
// substitution patterns (distinct positions, each edit changes its symbol).
// Chunked so the report is identical for any thread count at a fixed seed.
SimReport simulate(const Codec& codec, std::uint64_t trials, int weight,
                   std::uint64_t seed, int threads = 0);

}  // namespace nanoread
