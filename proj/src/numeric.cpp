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

#include "toricbch/numeric.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace toricbch {

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("prime_power_decompose: q must be >= 2");
    auto ps = distinct_prime_factors(q);
    if (ps.size() != 1)
        throw std::invalid_argument("prime_power_decompose: " + std::to_string(q) +
                                    " is not a prime power");
    std::uint64_t p = ps.front();
    unsigned m = 0;
    while (q > 1) {
        q /= p;
        ++m;
    }
    return {p, m};
}

bool is_prime_power(std::uint64_t q) {
    return q >= 2 && distinct_prime_factors(q).size() == 1;
}

std::uint64_t mul_order_mod(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mul_order_mod: n must be positive");
    if (n == 1) return 1;
    if (std::gcd(q % n, n) != 1)
        throw std::invalid_argument("mul_order_mod: gcd(q, n) != 1");
    std::uint64_t e = 1, c = q % n;
    while (c != 1) {
        c = (c * q) % n;
        ++e;
    }
    return e;
}

}  // namespace toricbch
