#include "qalg/field.hpp"

namespace qalg::linalg {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Scalar Field::pow(Scalar a, std::uint64_t e) const
{
    Scalar result = 1 % p_;
    Scalar base = a % p_;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Scalar Field::inv(Scalar a) const
{
    if (a % p_ == 0)
        throw FieldError("inverse of zero");
    return pow(a, p_ - 2);
}

}  // namespace qalg::linalg
