#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nanoread {

// Binary word x_1..x_n. Storage is 0-based; every position that appears in
// an error message or a report is 1-based, matching the text formats.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> bits);
    static BinaryWord zeros(std::size_t n);
    static BinaryWord from_string(std::string_view s);
    // x_i = bit (i-1) of value, so word index 1 sits in the least significant bit.
    static BinaryWord from_uint(std::uint64_t value, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::uint8_t& operator[](std::size_t i) { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::uint64_t to_uint() const;
    std::string to_string() const;
    int weight() const;

    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend bool operator<(const BinaryWord& a, const BinaryWord& b) {
        return a.bits_ < b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

// Coordinate-wise XOR of equal-length words.
BinaryWord operator^(const BinaryWord& a, const BinaryWord& b);

}  // namespace nanoread
