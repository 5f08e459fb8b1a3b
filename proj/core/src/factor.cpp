#include "plrot/factor.hpp"

#include "plrot/error.hpp"

namespace plrot {

Factorization factor_integer(const mpz_class& n, std::uint64_t bound) {
  if (n == 0) throw DomainError("cannot factor zero");
  Factorization out;
  mpz_class m = abs(n);
  auto strip = [&](std::uint64_t p) {
    long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out[p] += e;
  };
  strip(2);
  for (std::uint64_t p = 3; p <= bound && m > 1; p += 2) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;  // m is prime now
    strip(p);
  }
  if (m > 1) {
    mpz_class b(static_cast<unsigned long>(bound));
    if (m > b * b) {
      throw ResourceLimit("factorization exceeds trial-division bound " + std::to_string(bound));
    }
    if (!m.fits_ulong_p()) throw ResourceLimit("prime factor too large");
    out[m.get_ui()] += 1;
  }
  return out;
}

Factorization factor_rational(const mpz_class& num, const mpz_class& den, std::uint64_t bound) {
  Factorization out = factor_integer(num, bound);
  for (auto [p, e] : factor_integer(den, bound)) {
    out[p] -= e;
    if (out[p] == 0) out.erase(p);
  }
  return out;
}

}  // namespace plrot
