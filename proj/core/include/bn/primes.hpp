#pragma once

#include <cstdint>

namespace bn {

/// Deterministic Miller-Rabin, unconditional for all 64-bit inputs
/// (fixed base set {2,3,5,7,11,13,17,19,23,29,31,37}).
bool is_prime(std::uint64_t n);

std::uint64_t next_prime_geq(std::uint64_t n);
std::uint64_t next_prime_gt(std::uint64_t n);

}  // namespace bn
