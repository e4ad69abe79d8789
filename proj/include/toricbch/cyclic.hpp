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

#ifndef TORICBCH_CYCLIC_HPP
#define TORICBCH_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toricbch/matrix.hpp"
#include "toricbch/poly.hpp"

namespace toricbch {

/// Designed-distance parameters read off a zero set: the longest cyclic run
/// of consecutive exponents has length d_star - 1 and starts at b. Ties are
/// broken by the smallest b in [0, n); unique_run records whether another
/// run of the same length exists.
struct BchParams {
    std::uint64_t d_star;
    std::uint64_t b;
    bool unique_run;
};

/// A simple-root cyclic code of length n over GF(q), gcd(n, q) = 1, held as
/// the pair g * h = x^n - 1 together with its zero set
/// Z = {i mod n : g(alpha^i) = 0} for the canonical primitive n-th root of
/// unity alpha in GF(q^e), e = ord_n(q).
class CyclicCode {
   public:
    /// Code with parity-check polynomial h: generator (x^n - 1)/h. h is
    /// monic-normalized; throws if h does not divide x^n - 1.
    static CyclicCode from_parity_check(std::uint64_t n, const Poly& h);

    /// BCH code over f: generator lcm of the minimal polynomials of
    /// alpha^b, ..., alpha^(b + d_star - 2). d_star = 1 yields the full code.
    static CyclicCode bch(const FieldPtr& f, std::uint64_t n, std::uint64_t d_star,
                          std::uint64_t b);

    const FieldPtr& field() const { return f_; }
    std::uint64_t q() const { return f_->size(); }
    std::uint64_t length() const { return n_; }
    std::uint64_t dimension() const { return n_ - static_cast<std::uint64_t>(g_.degree()); }
    const Poly& generator() const { return g_; }
    const Poly& parity_check() const { return h_; }
    const std::vector<std::uint64_t>& zero_set() const { return zeros_; }
    unsigned splitting_degree() const { return e_; }
    FieldPtr splitting_field() const;
    /// The canonical primitive n-th root of unity in the splitting field.
    FieldElement alpha() const;

    BchParams designed_params() const;

    /// Euclidean dual: generator = monic reciprocal of h,
    /// Z(dual) = {-i mod n : i not in Z}.
    CyclicCode dual() const;

    /// Complementary-dual test, computed two ways that must agree:
    /// self-reciprocal generator, and rank n of the stacked generator
    /// matrices of the code and its dual.
    bool is_lcd() const;

    /// Non-systematic encoding: coefficients of message(x) * g(x).
    std::vector<FieldElement> encode(std::span<const FieldElement> message) const;

    /// k x n matrix whose row i holds the coefficients of x^i * g(x).
    Matrix generator_matrix() const;

    bool operator==(const CyclicCode& o) const {
        return f_ == o.f_ && n_ == o.n_ && g_ == o.g_;
    }

   private:
    CyclicCode(FieldPtr f, std::uint64_t n, Poly g, Poly h, unsigned e);

    static void validate_length(const FieldPtr& f, std::uint64_t n);
    void compute_zero_set();

    FieldPtr f_;
    std::uint64_t n_;
    Poly g_, h_;
    unsigned e_;
    std::vector<std::uint64_t> zeros_;
};

/// A linear code presented by a spanning set of rows (not necessarily a
/// basis); just enough generality for evaluation codes, puncturing and
/// subfield restriction.
class LinearCode {
   public:
    LinearCode(FieldPtr f, std::uint64_t n, Matrix rows);

    const FieldPtr& field() const { return f_; }
    std::uint64_t length() const { return n_; }
    std::uint64_t dimension() const;
    const Matrix& rows() const { return rows_; }

   private:
    FieldPtr f_;
    std::uint64_t n_;
    Matrix rows_;
    mutable std::int64_t rank_ = -1;
};

/// Evaluation code of span{x^-r, ..., x^s} on the rational points of the
/// multiplicative group: length q - 1, coordinates at gamma^0, gamma^1, ...
/// for the canonical primitive element gamma. Requires r + s < q - 1.
LinearCode p1_toric_code(const FieldPtr& f, std::uint64_t r, std::uint64_t s);

/// Restriction to the listed coordinates, in the listed order.
LinearCode puncture(const LinearCode& code, std::span<const std::size_t> keep);

/// All codewords with every coordinate in the image of `base`, returned as a
/// code over `base` (kernel of the base-expanded parity checks).
LinearCode subfield_subcode(const LinearCode& code, const FieldPtr& base);

/// Generator polynomial of a linear code that is cyclic in the given
/// coordinate order: monic gcd of x^n - 1 and the row polynomials. Returns
/// nullopt when the code is not cyclic (dimension mismatch).
std::optional<Poly> cyclic_generator(const LinearCode& code);

}  // namespace toricbch

#endif
