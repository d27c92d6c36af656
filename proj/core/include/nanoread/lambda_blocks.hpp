#pragma once

#include <cstdint>
#include <vector>

#include "nanoread/words.hpp"

namespace nanoread {

// 2p-bit blocks, packed with symbol s of the block in bit s. The alternating
// alphabet has two families of p blocks each:
//   family Alt01: (01)^j (10)^(p-j) for j = 1..p
//   family Alt10: (10)^j (01)^(p-j) for j = 1..p
// Everything else is a plain block. The two families are disjoint since every
// Alt01 block starts with 0 and every Alt10 block with 1.
enum class BlockFamily : std::uint8_t { Alt01 = 0, Alt10 = 1 };

struct BlockClass {
    bool alternating = false;
    BlockFamily family = BlockFamily::Alt01;
    int j = 0;  // 1..p, the switch point; meaningful only when alternating
};

constexpr int kMaxBlockP = 15;  // blocks are packed in 32-bit masks

std::uint32_t lambda_block(int p, BlockFamily family, int j);
std::vector<std::uint32_t> lambda_set(int p, BlockFamily family);
// Both families in one list: Alt01 with j ascending, then Alt10.
std::vector<std::uint32_t> lambda_all(int p);
// Every 2p-bit block outside both families, ascending. Refuses p > 10.
std::vector<std::uint32_t> lambda_tilde(int p);

BlockClass classify_block(std::uint32_t block, int p);

// Helpers for moving between packed blocks and word segments.
std::uint32_t pack_block(const BinaryWord& w, int start0, int p);
void unpack_block(std::uint32_t block, int p, BinaryWord& w, int start0);
std::string block_to_string(std::uint32_t block, int p);

}  // namespace nanoread
