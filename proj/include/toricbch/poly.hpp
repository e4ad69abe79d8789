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

#ifndef TORICBCH_POLY_HPP
#define TORICBCH_POLY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "toricbch/field.hpp"

namespace toricbch {

/// Dense univariate polynomial over a fixed field. Canonical form: no
/// trailing zero coefficients; the zero polynomial has an empty coefficient
/// sequence and degree -1.
class Poly {
   public:
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<FieldElement> coeffs);

    /// Coefficients given as integer encodings, constant term first (the
    /// serialization format).
    static Poly from_encs(const FieldPtr& f, std::span<const std::uint32_t> encs);
    static Poly x_pow_n_minus_one(const FieldPtr& f, std::uint64_t n);

    const FieldPtr& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
    FieldElement leading() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    std::vector<std::uint32_t> encs() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;
    Poly operator/(const Poly& o) const { return divmod(*this, o).first; }
    Poly operator%(const Poly& o) const { return divmod(*this, o).second; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// f = q * d + r with deg r < deg d. Throws on division by zero.
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& d);
    /// Monic gcd. Throws if both inputs are zero.
    static Poly gcd(const Poly& a, const Poly& b);
    /// Monic lcm, a * b / gcd(a, b).
    static Poly lcm(const Poly& a, const Poly& b);

    Poly monic() const;
    bool is_monic() const { return !is_zero() && leading() == f_->one(); }
    /// x^deg(f) * f(1/x): reversed coefficients. Requires f(0) != 0.
    Poly reciprocal() const;

    FieldElement eval(const FieldElement& x) const;
    /// Evaluation at a point of an extension field, coefficients lifted
    /// through the canonical embedding.
    FieldElement eval_lifted(const FieldElement& x) const;

   private:
    void prune();

    FieldPtr f_;
    std::vector<FieldElement> c_;
};

/// The orbit {i, iq, iq^2, ...} mod n, sorted. Requires gcd(q, n) = 1.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t n, std::uint64_t q);

/// The minimal polynomial of beta over the subfield `base` of beta's field:
/// the monic product of (x - beta^(q^j)) over the Frobenius orbit, with every
/// coefficient certified to lie in the image of `base`.
Poly minimal_polynomial(const FieldElement& beta, const FieldPtr& base);

}  // namespace toricbch

#endif
