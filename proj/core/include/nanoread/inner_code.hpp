#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "nanoread/bch.hpp"
#include "nanoread/words.hpp"

namespace nanoread {

enum class InnerKind { Identity, Repetition, Bch };

// The substitution-correcting code applied to the parity prefix of a read.
// Three concrete families cover the uses here: identity (no protection,
// handy as a baseline), length-n repetition of a single bit, and binary BCH.
class InnerCode {
public:
    static InnerCode identity(std::uint32_t n);
    static InnerCode repetition(std::uint32_t n);
    static InnerCode bch(int m, int t, std::uint32_t shorten = 0);

    InnerKind kind() const { return kind_; }
    std::uint32_t length() const { return n_; }
    std::uint32_t dimension() const { return k_; }
    std::uint32_t redundancy() const { return n_ - k_; }
    // Substitution count the decoder is designed to correct.
    std::uint32_t design_errors() const { return t_; }
    std::string describe() const;

    BinaryWord encode(const BinaryWord& message) const;

    struct Decoded {
        bool ok = false;
        BinaryWord codeword;
        BinaryWord message;
        std::uint32_t corrections = 0;
    };
    Decoded decode(const BinaryWord& received) const;

    // True minimum distance by scanning all 2^k - 1 nonzero messages; the
    // families here are linear, so minimum weight equals minimum distance.
    // Refuses dimensions above 22.
    std::uint32_t min_distance_exhaustive() const;

private:
    InnerCode(InnerKind kind, std::uint32_t n, std::uint32_t k, std::uint32_t t)
        : kind_(kind), n_(n), k_(k), t_(t) {}

    InnerKind kind_ = InnerKind::Identity;
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t t_ = 0;
    std::shared_ptr<const BchCode> bch_;
};

}  // namespace nanoread
