#include "vrc/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace vrc {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::domain_error("totient: n must be positive");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::domain_error("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

std::uint64_t tau(std::uint64_t n) {
  return divisors(n).size();
}

std::uint64_t partitions(std::uint64_t n) {
  // Bounded-part DP: table[j] accumulates partitions of j into parts <= k.
  std::vector<std::uint64_t> table(n + 1, 0);
  table[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::uint64_t j = k; j <= n; ++j) {
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(table[j], table[j - k], &sum))
        throw std::overflow_error("partitions: value exceeds 64-bit range");
      table[j] = sum;
    }
  }
  return table[n];
}

}  // namespace vrc
