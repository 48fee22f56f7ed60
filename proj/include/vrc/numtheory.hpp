#pragma once

#include <cstdint>
#include <vector>

namespace vrc {

// Exact integer helpers used by the closed-form counts. All arithmetic is
// 64-bit and overflow-checked; there is no floating point anywhere.

// Euler totient. Rejects n = 0.
std::uint64_t totient(std::uint64_t n);

// Positive divisors of n in strictly ascending order. Rejects n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Divisor count tau(n) = |divisors(n)|. Rejects n = 0.
std::uint64_t tau(std::uint64_t n);

// Partition count p(n), with p(0) = 1. Throws std::overflow_error once the
// value leaves 64-bit range (around n = 400).
std::uint64_t partitions(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace vrc
