#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "invtensor/errors.hpp"

namespace invtensor {

using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// Serialized as "p" or "p/q" so exactness survives round trips.
inline std::string rat_to_string(const Rat& x)
{
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::int64_t mod_pos(std::int64_t v, std::int64_t p)
{
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t acc = 1;
    b %= p;
    while (e) {
        if (e & 1)
            acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw BadPrime("division by zero mod " + std::to_string(p));
    return pow_mod(a % p, p - 2, p); // p prime
}

// Reduce an exact rational mod p. Throws BadPrime when the denominator
// vanishes mod p; the caller retries with another prime.
inline std::uint64_t rat_mod(const Rat& x, std::uint64_t p)
{
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0)
        nr += pz;
    std::uint64_t n = nr.get_ui();
    std::uint64_t d = dr.get_ui();
    if (d == 0)
        throw BadPrime("denominator of " + rat_to_string(x) + " vanishes mod " + std::to_string(p));
    return n * inv_mod(d, p) % p;
}

} // namespace invtensor
