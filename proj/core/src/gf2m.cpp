#include "nanoread/gf2m.hpp"

#include <stdexcept>
#include <string>

namespace nanoread {

std::uint32_t default_field_modulus(int m) {
    switch (m) {
        case 2: return 0b111;              // x^2 + x + 1
        case 3: return 0b1011;             // x^3 + x + 1
        case 4: return 0b10011;            // x^4 + x + 1
        case 5: return 0b100101;           // x^5 + x^2 + 1
        case 6: return 0b1000011;          // x^6 + x + 1
        case 7: return 0b10001001;         // x^7 + x^3 + 1
        case 8: return 0b100011101;        // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0b1000010001;       // x^9 + x^4 + 1
        case 10: return 0b10000001001;     // x^10 + x^3 + 1
        case 11: return 0b100000000101;    // x^11 + x^2 + 1
        case 12: return 0b1000001010011;   // x^12 + x^6 + x^4 + x + 1
        default:
            throw std::invalid_argument("field degree must be in [2, 12], got " +
                                        std::to_string(m));
    }
}

FieldContext::FieldContext(int m) : FieldContext(m, default_field_modulus(m)) {}

FieldContext::FieldContext(int m, std::uint32_t poly) : m_(m), poly_(poly) {
    if (m < 2 || m > 12) {
        throw std::invalid_argument("field degree must be in [2, 12], got " +
                                    std::to_string(m));
    }
    if (poly_ >> m_ != 1) {
        throw std::invalid_argument("field modulus must have degree exactly " +
                                    std::to_string(m));
    }
    build_tables();
}

void FieldContext::build_tables() {
    const std::uint32_t order = group_order();
    exp_.assign(std::size_t(2) * order, 0);
    log_.assign(field_size(), 0);

    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        if (v == 1 && i != 0) {
            // x has a period shorter than 2^m - 1, so it does not generate
            // the group: the modulus is reducible or merely irreducible
            // without being primitive.
            throw std::invalid_argument("field modulus is not primitive");
        }
        exp_[i] = v;
        log_[v] = i;
        v <<= 1;
        if (v & field_size()) v ^= poly_;
    }
    if (v != 1) {
        throw std::invalid_argument("field modulus is not primitive");
    }
    for (std::uint32_t i = 0; i < order; ++i) exp_[order + i] = exp_[i];
}

std::uint32_t FieldContext::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint32_t FieldContext::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return exp_[group_order() - log_[a]];
}

std::uint32_t FieldContext::div(std::uint32_t a, std::uint32_t b) const {
    if (b == 0) throw std::domain_error("division by zero field element");
    if (a == 0) return 0;
    return exp_[log_[a] + group_order() - log_[b]];
}

std::uint32_t FieldContext::alpha_pow(long long e) const {
    const long long order = group_order();
    long long r = e % order;
    if (r < 0) r += order;
    return exp_[std::size_t(r)];
}

std::uint32_t FieldContext::log(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("log of zero field element");
    if (a >= field_size()) throw std::domain_error("field element out of range");
    return log_[a];
}

}  // namespace nanoread
