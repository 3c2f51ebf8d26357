#include "coxcount/primes.hpp"

#include <stdexcept>

namespace coxcount {

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  if (limit > 100000000) throw std::invalid_argument("sieve_primes: limit too large");
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j <= limit; j += i)
      composite[static_cast<std::size_t>(j)] = 1;
  }
  for (std::int64_t i = 2; i <= limit; ++i)
    if (!composite[static_cast<std::size_t>(i)]) primes.push_back(i);
  return primes;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace coxcount
