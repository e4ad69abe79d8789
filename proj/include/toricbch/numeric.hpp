/*
   Copyright 2026 The toricbch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TORICBCH_NUMERIC_HPP
#define TORICBCH_NUMERIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace toricbch {

/// Exact integer square root: largest r with r*r <= n.
std::uint64_t isqrt_u64(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Writes q = p^m with p prime, m >= 1. Throws std::invalid_argument if q is
/// not a prime power (or q < 2).
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);

bool is_prime_power(std::uint64_t q);

/// Multiplicative order of q modulo n. Requires gcd(q, n) = 1.
std::uint64_t mul_order_mod(std::uint64_t q, std::uint64_t n);

/// Ceiling of a / b for positive integers.
inline std::uint64_t ceil_div_u64(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

}  // namespace toricbch

#endif
