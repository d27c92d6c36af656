#pragma once

#include <cstdint>
#include <vector>

namespace nanoread {

// GF(2^m) arithmetic over log/antilog tables, m in [2, 12].  Elements are
// polynomial bit masks; alpha (the class of x) generates the multiplicative
// group, which the constructor checks before accepting the modulus.
class FieldContext {
public:
    // Builds tables for the given extension degree using a built-in
    // primitive modulus.
    explicit FieldContext(int m);

    // Same, but with a caller-supplied modulus (degree m, bit m set).
    // Throws std::invalid_argument if x is not primitive mod poly.
    FieldContext(int m, std::uint32_t poly);

    int degree() const { return m_; }
    std::uint32_t modulus() const { return poly_; }
    std::uint32_t field_size() const { return std::uint32_t(1) << m_; }
    // Multiplicative group order, 2^m - 1.
    std::uint32_t group_order() const { return field_size() - 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    // alpha^e for any integer exponent (negative allowed).
    std::uint32_t alpha_pow(long long e) const;
    // Discrete log base alpha; a must be nonzero.
    std::uint32_t log(std::uint32_t a) const;

private:
    void build_tables();

    int m_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[i] = alpha^i, i in [0, 2(2^m-1))
    std::vector<std::uint32_t> log_;  // log_[a] for a in [1, 2^m)
};

// Built-in primitive modulus for degree m (m in [2, 12]).
std::uint32_t default_field_modulus(int m);

}  // namespace nanoread
