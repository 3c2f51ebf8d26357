#ifndef COXCOUNT_PRIMES_HPP
#define COXCOUNT_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace coxcount {

// All primes <= limit, ascending. Plain sieve of Eratosthenes; limits up to
// ~10^7 are the intended range here.
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

bool is_prime(std::int64_t n);

}  // namespace coxcount

#endif
