#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qalg::linalg {

using Scalar = std::uint32_t;

/// Moduli are capped so that a product of two residues fits in 64 bits
/// with room to spare, and so the vector kernels can use 32-bit lanes.
inline constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;
inline constexpr std::uint32_t kDefaultModulus = 101;

bool is_prime(std::uint64_t n);

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic in GF(p). Residues are kept in [0, p).
class Field {
public:
    explicit Field(std::uint32_t p = kDefaultModulus) : p_(p)
    {
        if (p > kMaxModulus || !is_prime(p))
            throw FieldError("modulus " + std::to_string(p) + " is not a supported prime");
    }

    std::uint32_t modulus() const { return p_; }

    Scalar reduce(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p_ - b); }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const
    {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Scalar pow(Scalar a, std::uint64_t e) const;
    /// Inverse of a nonzero residue (Fermat).
    Scalar inv(Scalar a) const;

    bool operator==(const Field&) const = default;

private:
    std::uint32_t p_;
};

}  // namespace qalg::linalg
