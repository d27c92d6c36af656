#include "nanoread/lambda_blocks.hpp"

#include <stdexcept>
#include <string>

namespace nanoread {

namespace {

void check_p(int p) {
    if (p < 1 || p > kMaxBlockP) {
        throw std::invalid_argument("block parameter p = " + std::to_string(p) +
                                    " outside 1.." + std::to_string(kMaxBlockP));
    }
}

}  // namespace

std::uint32_t lambda_block(int p, BlockFamily family, int j) {
    check_p(p);
    if (j < 1 || j > p) {
        throw std::invalid_argument("lambda block index j = " + std::to_string(j) +
                                    " outside 1.." + std::to_string(p));
    }
    // Pair s (0-based) is 01 or 10; bit 2s holds the first symbol of the pair.
    std::uint32_t block = 0;
    for (int s = 0; s < p; ++s) {
        bool front = s < j;
        bool is01 = (family == BlockFamily::Alt01) ? front : !front;
        if (is01) {
            block |= std::uint32_t(1) << (2 * s + 1);  // 0 then 1
        } else {
            block |= std::uint32_t(1) << (2 * s);  // 1 then 0
        }
    }
    return block;
}

std::vector<std::uint32_t> lambda_set(int p, BlockFamily family) {
    check_p(p);
    std::vector<std::uint32_t> out;
    out.reserve(p);
    for (int j = 1; j <= p; ++j) out.push_back(lambda_block(p, family, j));
    return out;
}

std::vector<std::uint32_t> lambda_all(int p) {
    std::vector<std::uint32_t> out = lambda_set(p, BlockFamily::Alt01);
    std::vector<std::uint32_t> second = lambda_set(p, BlockFamily::Alt10);
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

std::vector<std::uint32_t> lambda_tilde(int p) {
    check_p(p);
    if (p > 10) {
        throw std::invalid_argument("refusing to materialize 4^" + std::to_string(p) +
                                    " blocks; lambda_tilde allows p <= 10");
    }
    std::vector<std::uint32_t> out;
    const std::uint32_t total = std::uint32_t(1) << (2 * p);
    out.reserve(total - 2 * p);
    for (std::uint32_t b = 0; b < total; ++b) {
        if (!classify_block(b, p).alternating) out.push_back(b);
    }
    return out;
}

BlockClass classify_block(std::uint32_t block, int p) {
    check_p(p);
    if ((block >> (2 * p)) != 0) {
        throw std::invalid_argument("block has bits beyond 2p = " + std::to_string(2 * p));
    }
    // Read the p symbol pairs; anything other than 01/10 disqualifies at once.
    // 0 encodes a 01 pair, 1 encodes 10.
    int first = -1, j = 0;
    bool in_prefix = true;
    for (int s = 0; s < p; ++s) {
        int a = (block >> (2 * s)) & 1;
        int b = (block >> (2 * s + 1)) & 1;
        if (a == b) return {};
        int pat = a;  // a=0,b=1 -> 01 ; a=1,b=0 -> 10
        if (s == 0) {
            first = pat;
            j = 1;
            continue;
        }
        if (in_prefix && pat == first) {
            ++j;
        } else if (pat != first) {
            in_prefix = false;
        } else {
            return {};  // switched back to the leading pattern
        }
    }
    BlockClass c;
    c.alternating = true;
    c.family = (first == 0) ? BlockFamily::Alt01 : BlockFamily::Alt10;
    c.j = j;
    return c;
}

std::uint32_t pack_block(const BinaryWord& w, int start0, int p) {
    check_p(p);
    if (start0 < 0 || start0 + 2 * p > int(w.size())) {
        throw std::invalid_argument("block window outside the word");
    }
    std::uint32_t block = 0;
    for (int s = 0; s < 2 * p; ++s) block |= std::uint32_t(w[start0 + s]) << s;
    return block;
}

void unpack_block(std::uint32_t block, int p, BinaryWord& w, int start0) {
    check_p(p);
    if (start0 < 0 || start0 + 2 * p > int(w.size())) {
        throw std::invalid_argument("block window outside the word");
    }
    for (int s = 0; s < 2 * p; ++s) w[start0 + s] = (block >> s) & 1;
}

std::string block_to_string(std::uint32_t block, int p) {
    std::string s(2 * p, '0');
    for (int i = 0; i < 2 * p; ++i) s[i] = char('0' + ((block >> i) & 1));
    return s;
}

}  // namespace nanoread
