#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nanoread/words.hpp"

namespace nanoread {

// Channel output for one word: r_i = weight of the ell-bit window of x ending
// at position i, with zero padding outside the word. Length n + ell - 1,
// symbols in 0..ell.
class ReadVector {
public:
    ReadVector() = default;
    ReadVector(std::vector<int> symbols, int ell);
    static ReadVector from_string(std::string_view csv, int ell);

    std::size_t size() const { return symbols_.size(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    int& operator[](std::size_t i) { return symbols_[i]; }
    int window() const { return ell_; }
    // Word length this vector corresponds to.
    int word_len() const { return int(symbols_.size()) - ell_ + 1; }
    const std::vector<int>& symbols() const { return symbols_; }
    std::string to_string() const;  // "0,1,2,2,2,1,1,0"

    friend bool operator==(const ReadVector&, const ReadVector&) = default;

private:
    std::vector<int> symbols_;
    int ell_ = 0;
};

ReadVector read_vector(const BinaryWord& x, int ell);

// First n read symbols reduced mod 2.
BinaryWord mod2_prefix(const ReadVector& r, int n);

// The unique x whose read vector starts with the given parity bits:
// x_i = p_i ^ p_{i-1} ^ x_{i-ell} with p_0 = 0 and x_j = 0 for j <= 0.
BinaryWord invert_parity(const BinaryWord& p, int ell);

// One substitution: rewrite symbol at a 1-based position to a new value.
struct Edit {
    int pos = 0;
    int value = 0;
};

struct SubstitutionPattern {
    std::vector<Edit> edits;
    int weight() const { return int(edits.size()); }
};

// Result of applying a pattern. Edits that rewrite a symbol to its current
// value are permitted and counted separately from the ones that changed it.
struct EditOutcome {
    ReadVector result;
    int effective = 0;
};
EditOutcome apply_substitutions(const ReadVector& r, const SubstitutionPattern& pattern);

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b);
int hamming_distance(const ReadVector& a, const ReadVector& b);
int hamming_distance(const BinaryWord& a, const BinaryWord& b);

struct CodeCheckWitness {
    BinaryWord x, y;
    int distance = 0;
};
struct CodeCheckResult {
    bool ok = false;
    std::optional<CodeCheckWitness> witness;  // first offending pair when !ok
};

// A word set survives t substitutions on its read vectors exactly when all
// pairwise read distances exceed 2t. Quadratic in the set size.
CodeCheckResult is_t_sub_read_code(const std::vector<BinaryWord>& words, int ell, int t);

// Recovers x from an uncorrupted read vector by a left-to-right difference
// scan; nullopt when r is not the read vector of any word.
std::optional<BinaryWord> reconstruct_from_clean_read(const ReadVector& r);

}  // namespace nanoread
