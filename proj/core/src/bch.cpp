#include "nanoread/bch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace nanoread {

namespace {

// Minimal polynomial of alpha^s: product of (x - alpha^e) over the
// cyclotomic coset of s.  Coefficients land back in GF(2).
std::vector<std::uint8_t> minimal_poly(const FieldContext& f, std::uint32_t s) {
    std::set<std::uint32_t> coset;
    std::uint32_t e = s;
    do {
        coset.insert(e);
        e = std::uint32_t((std::uint64_t(e) * 2) % f.group_order());
    } while (e != s);

    // Polynomial over GF(2^m), ascending coefficients, starting at 1.
    std::vector<std::uint32_t> poly{1};
    for (std::uint32_t ex : coset) {
        const std::uint32_t root = f.alpha_pow(ex);
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= f.mul(poly[i], root);
        }
        poly = std::move(next);
    }

    std::vector<std::uint8_t> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1) {
            throw std::logic_error("minimal polynomial has a non-binary coefficient");
        }
        out[i] = std::uint8_t(poly[i]);
    }
    return out;
}

std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    }
    return out;
}

}  // namespace

BchCode::BchCode(int m, int t, std::uint32_t shorten) : field_(m), t_(t) {
    if (t < 1) {
        throw std::invalid_argument("designed error count must be at least 1, got " +
                                    std::to_string(t));
    }
    n_full_ = field_.group_order();

    // Generator = lcm of the minimal polynomials of alpha^1 .. alpha^{2t},
    // i.e. the product over distinct cyclotomic cosets.
    std::set<std::uint32_t> seen;
    gen_ = {1};
    for (std::uint32_t s = 1; s <= std::uint32_t(2 * t); ++s) {
        std::uint32_t rep = s % n_full_;
        if (rep == 0) {
            throw std::invalid_argument("designed distance exceeds the field order");
        }
        // Canonical coset representative: smallest element.
        std::uint32_t e = rep, least = rep;
        do {
            least = std::min(least, e);
            e = std::uint32_t((std::uint64_t(e) * 2) % n_full_);
        } while (e != rep);
        if (!seen.insert(least).second) continue;
        gen_ = poly_mul_gf2(gen_, minimal_poly(field_, least));
    }

    const std::uint32_t deg = std::uint32_t(gen_.size() - 1);
    if (deg >= n_full_) {
        throw std::invalid_argument("code has no information positions for t=" +
                                    std::to_string(t) + " at length " +
                                    std::to_string(n_full_));
    }
    const std::uint32_t k_full = n_full_ - deg;
    if (shorten >= k_full) {
        throw std::invalid_argument("shortening by " + std::to_string(shorten) +
                                    " removes every information position");
    }
    n_ = n_full_ - shorten;
    k_ = k_full - shorten;
}

BinaryWord BchCode::encode(const BinaryWord& message) const {
    if (message.size() != k_) {
        throw std::invalid_argument("message length " + std::to_string(message.size()) +
                                    " does not match code dimension " + std::to_string(k_));
    }
    const std::uint32_t nk = redundancy();
    // CRC-style division: parity = x^{n-k} u(x) mod g(x).
    std::vector<std::uint8_t> rem(nk, 0);
    for (std::uint32_t i = k_; i-- > 0;) {
        const std::uint8_t feedback = std::uint8_t(message[i] ^ rem[nk - 1]);
        for (std::uint32_t j = nk - 1; j > 0; --j) rem[j] = rem[j - 1];
        rem[0] = 0;
        if (feedback) {
            for (std::uint32_t j = 0; j < nk; ++j) rem[j] ^= gen_[j];
        }
    }
    std::vector<std::uint8_t> bits(n_, 0);
    for (std::uint32_t j = 0; j < nk; ++j) bits[j] = rem[j];
    for (std::uint32_t i = 0; i < k_; ++i) bits[nk + i] = message[i];
    return BinaryWord(std::move(bits));
}

std::vector<std::uint32_t> BchCode::syndromes(const BinaryWord& r) const {
    std::vector<std::uint32_t> s(std::size_t(2 * t_) + 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (!r[i]) continue;
        for (int j = 1; j <= 2 * t_; ++j) {
            s[std::size_t(j)] ^= field_.alpha_pow(std::int64_t(j) * i);
        }
    }
    return s;
}

BchCode::DecodeResult BchCode::decode(const BinaryWord& received) const {
    if (received.size() != n_) {
        throw std::invalid_argument("received length " + std::to_string(received.size()) +
                                    " does not match code length " + std::to_string(n_));
    }
    DecodeResult res;

    std::vector<std::uint32_t> syn = syndromes(received);
    const bool clean = std::all_of(syn.begin() + 1, syn.end(),
                                   [](std::uint32_t v) { return v == 0; });

    std::vector<std::uint8_t> bits(n_);
    for (std::uint32_t i = 0; i < n_; ++i) bits[i] = received[i];

    if (!clean) {
        // Berlekamp-Massey over GF(2^m): find the shortest LFSR generating
        // the syndrome sequence; its connection polynomial locates errors.
        std::vector<std::uint32_t> c{1}, b{1};
        std::uint32_t bscale = 1;
        int len = 0, gap = 1;
        for (int idx = 0; idx < 2 * t_; ++idx) {
            std::uint32_t d = syn[std::size_t(idx) + 1];
            for (int i = 1; i <= len; ++i) {
                if (std::size_t(i) < c.size()) {
                    d ^= field_.mul(c[std::size_t(i)], syn[std::size_t(idx + 1 - i)]);
                }
            }
            if (d == 0) {
                ++gap;
            } else if (2 * len <= idx) {
                std::vector<std::uint32_t> prev = c;
                const std::uint32_t coef = field_.div(d, bscale);
                if (c.size() < b.size() + std::size_t(gap)) c.resize(b.size() + gap, 0);
                for (std::size_t i = 0; i < b.size(); ++i) {
                    c[i + gap] ^= field_.mul(coef, b[i]);
                }
                len = idx + 1 - len;
                b = std::move(prev);
                bscale = d;
                gap = 1;
            } else {
                const std::uint32_t coef = field_.div(d, bscale);
                if (c.size() < b.size() + std::size_t(gap)) c.resize(b.size() + gap, 0);
                for (std::size_t i = 0; i < b.size(); ++i) {
                    c[i + gap] ^= field_.mul(coef, b[i]);
                }
                ++gap;
            }
        }
        if (len > t_) return res;  // more errors than the code can place

        // Chien search across the full-length coordinate range.  Roots in
        // the shortened prefix would point at bits the code fixed to zero.
        std::vector<std::uint32_t> locs;
        for (std::uint32_t i = 0; i < n_full_; ++i) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (c[j]) acc ^= field_.mul(c[j], field_.alpha_pow(-std::int64_t(i) * std::int64_t(j)));
            }
            if (acc == 0) locs.push_back(i);
        }
        if (locs.size() != std::size_t(len)) return res;  // locator did not split
        for (std::uint32_t loc : locs) {
            if (loc >= n_) return res;  // error in the shortened padding
            bits[loc] ^= 1;
        }

        BinaryWord fixed(bits);
        std::vector<std::uint32_t> recheck = syndromes(fixed);
        if (!std::all_of(recheck.begin() + 1, recheck.end(),
                         [](std::uint32_t v) { return v == 0; })) {
            return res;
        }
        res.corrections = std::uint32_t(locs.size());
    }

    res.ok = true;
    res.codeword = BinaryWord(bits);
    std::vector<std::uint8_t> msg(k_);
    for (std::uint32_t i = 0; i < k_; ++i) msg[i] = bits[redundancy() + i];
    res.message = BinaryWord(std::move(msg));
    return res;
}

bool BchCode::is_codeword(const BinaryWord& w) const {
    if (w.size() != n_) return false;
    std::vector<std::uint32_t> s = syndromes(w);
    return std::all_of(s.begin() + 1, s.end(), [](std::uint32_t v) { return v == 0; });
}

}  // namespace nanoread
