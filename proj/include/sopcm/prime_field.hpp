#pragma once

#include <cstdint>
#include <string>

#include "sopcm/error.hpp"

namespace sopcm {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// GF(p) for a prime p < 2^31; elements are canonical residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
            throw InvalidInput("field characteristic must be a prime below 2^31, got " + std::to_string(p));
        }
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) {
            throw InternalError("inverse of zero in GF(" + std::to_string(p_) + ")");
        }
        return pow(a, p_ - 2);
    }

    /// Symmetric representative in (-p/2, p/2], used for printing.
    long long symmetric(std::uint32_t a) const { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

}  // namespace sopcm
