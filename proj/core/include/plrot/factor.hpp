#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

namespace plrot {

/// Prime -> exponent. Exponents are negative for denominator primes.
using Factorization = std::map<std::uint64_t, long>;

/// Trial-division factorization of |n| (n != 0). Throws ResourceLimit when
/// a cofactor larger than bound^2 remains, since it could be composite.
Factorization factor_integer(const mpz_class& n, std::uint64_t bound);

/// Factorization of a nonzero rational num/den (denominator exponents negative).
Factorization factor_rational(const mpz_class& num, const mpz_class& den, std::uint64_t bound);

}  // namespace plrot
