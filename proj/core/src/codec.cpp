#include "nanoread/codec.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "nanoread/parallel.hpp"

namespace nanoread {

Codec::Codec(InnerCode inner, int ell) : inner_(std::move(inner)), ell_(ell) {
    if (ell < 1) {
        throw std::invalid_argument("window must be at least 1, got " + std::to_string(ell));
    }
}

BinaryWord Codec::encode(const BinaryWord& message) const {
    return invert_parity(inner_.encode(message), ell_);
}

Codec::ReadDecode Codec::decode_read(const ReadVector& r) const {
    if (r.window() != ell_) {
        throw std::invalid_argument("read window " + std::to_string(r.window()) +
                                    " does not match codec window " + std::to_string(ell_));
    }
    if (r.word_len() != int(length())) {
        throw std::invalid_argument("read length " + std::to_string(r.size()) +
                                    " does not match word length " + std::to_string(length()));
    }
    ReadDecode out;
    InnerCode::Decoded d = inner_.decode(mod2_prefix(r, int(length())));
    if (!d.ok) return out;
    out.ok = true;
    out.parity_corrections = d.corrections;
    out.message = std::move(d.message);
    out.word = invert_parity(d.codeword, ell_);
    out.read_residual = hamming_distance(read_vector(out.word, ell_), r);
    return out;
}

SimReport simulate(const Codec& codec, std::uint64_t trials, int weight,
                   std::uint64_t seed, int threads) {
    if (trials == 0) throw std::invalid_argument("simulation needs at least one trial");
    if (threads <= 0) threads = default_thread_count();
    if (weight < 0 || std::size_t(weight) > codec.read_len()) {
        throw std::invalid_argument("substitution weight " + std::to_string(weight) +
                                    " does not fit a read of length " +
                                    std::to_string(codec.read_len()));
    }

    const std::size_t chunk = 4096;
    const std::size_t slots = chunk_count(trials, chunk);
    std::vector<std::uint64_t> ok_slot(slots, 0), exact_slot(slots, 0), corr_slot(slots, 0);

    const std::uint32_t k = codec.dimension();
    const std::size_t rlen = codec.read_len();
    const int ell = codec.ell();

    parallel_chunks(trials, chunk, threads,
                    [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
        std::mt19937_64 rng(mix_seed(seed, slot));
        std::uint64_t ok = 0, exact = 0, corr = 0;
        std::vector<std::uint8_t> msg_bits(k);
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            for (std::uint32_t i = 0; i < k; ++i) msg_bits[i] = std::uint8_t(rng() & 1);
            const BinaryWord msg(msg_bits);
            const BinaryWord x = codec.encode(msg);
            ReadVector r = read_vector(x, ell);

            // Distinct positions, and every edit really moves its symbol, so
            // the corrupted read sits at Hamming distance exactly `weight`.
            SubstitutionPattern pattern;
            std::vector<char> used(rlen + 1, 0);
            for (int e = 0; e < weight; ++e) {
                int pos;
                do {
                    pos = 1 + int(rng() % rlen);
                } while (used[pos]);
                used[pos] = 1;
                int value;
                do {
                    value = int(rng() % std::uint64_t(ell + 1));
                } while (value == r[std::size_t(pos) - 1]);
                pattern.edits.push_back({pos, value});
            }
            const ReadVector corrupted = apply_substitutions(r, pattern).result;

            Codec::ReadDecode dec = codec.decode_read(corrupted);
            if (dec.ok) {
                ++ok;
                corr = std::max(corr, std::uint64_t(dec.parity_corrections));
                if (dec.message == msg) ++exact;
            }
        }
        ok_slot[slot] = ok;
        exact_slot[slot] = exact;
        corr_slot[slot] = corr;
    });

    SimReport rep;
    rep.trials = trials;
    rep.weight = weight;
    for (std::size_t s = 0; s < slots; ++s) {
        rep.decode_ok += ok_slot[s];
        rep.success += exact_slot[s];
        rep.max_corrections = std::max(rep.max_corrections, corr_slot[s]);
    }
    rep.miscorrect = rep.decode_ok - rep.success;
    rep.fail = rep.trials - rep.decode_ok;
    rep.success_rate = double(rep.success) / double(rep.trials);
    return rep;
}

}  // namespace nanoread
