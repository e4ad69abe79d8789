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

#ifndef TORICBCH_FIELD_HPP
#define TORICBCH_FIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace toricbch {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a concrete GF(p^m). Stores the integer encoding
/// enc = sum coeffs[i] * p^i of its coefficient vector; the encoding is the
/// only wire representation used elsewhere.
class FieldElement {
   public:
    FieldElement() : f_(nullptr), enc_(0) {}

    std::uint32_t enc() const { return enc_; }
    const Field& field() const;
    bool is_zero() const { return enc_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    /// a -> a^p, the absolute Frobenius.
    FieldElement frobenius() const;

    /// Coefficient vector over GF(p), length m, index i holds the coefficient
    /// of gamma^i (gamma = residue class of the indeterminate).
    std::vector<std::uint8_t> coeffs() const;

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && enc_ == o.enc_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

   private:
    friend class Field;
    FieldElement(const Field* f, std::uint32_t enc) : f_(f), enc_(enc) {}

    const Field* f_;
    std::uint32_t enc_;
};

/// A concrete finite field GF(p^m) with the canonical modulus: the
/// lexicographically smallest monic primitive polynomial of degree m over
/// GF(p), candidates ordered by the base-p integer with digits
/// (a_{m-1}, ..., a_0). For m = 1 the modulus is x - g0 with g0 the least
/// primitive root mod p. The residue class of x (gamma) therefore always
/// generates the multiplicative group.
///
/// Instances are interned: make(p, m) returns the same object for the same
/// (p, m), and instances are immutable, so raw Field pointers held by
/// elements stay valid for the lifetime of the program.
class Field {
   public:
    /// Largest supported field size. Covers every extension this project
    /// needs (up to GF(3^12) = 531441 for the length-73 family at q = 9).
    static constexpr std::uint64_t kMaxSize = 1ull << 21;

    static FieldPtr make(std::uint64_t p, unsigned m);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t size() const { return q_; }

    /// Monic modulus, length m + 1, constant term first.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    /// Canonical primitive element (class of x; least primitive root for m = 1).
    FieldElement generator() const { return FieldElement(this, gamma_); }

    FieldElement element(std::uint32_t enc) const;
    FieldElement from_int(std::uint64_t c) const;  // c mod p times the identity
    FieldElement from_coeffs(std::span<const std::uint8_t> cs) const;

    /// Raw arithmetic on encodings (used by FieldElement operators and the
    /// performance-sensitive enumeration kernels).
    std::uint32_t add_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_enc(std::uint32_t a) const;
    std::uint32_t mul_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_enc(std::uint32_t a) const;
    std::uint32_t pow_enc(std::uint32_t a, std::uint64_t e) const;

    /// Distinct prime factors of p^m - 1.
    const std::vector<std::uint64_t>& unit_order_factors() const { return unit_factors_; }

    ~Field() = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field(std::uint64_t p, unsigned m);

    std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const;
    void build_tables() const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint8_t> modulus_;
    std::uint32_t gamma_;
    std::vector<std::uint64_t> unit_factors_;
    std::vector<std::uint32_t> pow_p_;  // p^i for i in [0, m]

    // log/antilog tables, built lazily for fields with at most 2^16 elements
    mutable std::once_flag tables_once_;
    mutable std::vector<std::uint32_t> log_;
    mutable std::vector<std::uint32_t> exp_;
    mutable bool tables_built_ = false;
};

/// Least t >= 1 with a^t = 1; divides p^m - 1. Throws on zero input.
std::uint64_t element_order(const FieldElement& a);

/// Canonical primitive n-th root of unity gamma^((p^m - 1)/n).
/// Requires n | p^m - 1.
FieldElement nth_root_of_unity(const FieldPtr& f, std::uint64_t n);

/// Relative trace to the subfield GF(p^sub_degree):
/// sum of a^(p^sub_degree)^i over i in [0, m/sub_degree). Requires
/// sub_degree | m. The result is returned in the ambient field and is fixed
/// by x -> x^(p^sub_degree).
FieldElement trace_to_subfield(const FieldElement& a, unsigned sub_degree);

/// The canonical embedding GF(p^s) -> GF(p^(s*e)): the class of x in the
/// small field is mapped to the root of the small modulus in the big field
/// with the smallest encoding. Cached per field pair.
class SubfieldMap {
   public:
    static const SubfieldMap& get(const FieldPtr& sub, const FieldPtr& sup);

    const FieldPtr& subfield() const { return sub_; }
    const FieldPtr& superfield() const { return sup_; }
    unsigned relative_degree() const { return e_; }

    FieldElement lift(const FieldElement& a) const;
    /// Inverse of lift; throws std::invalid_argument if b is not in the image.
    FieldElement lower(const FieldElement& b) const;
    bool in_subfield(const FieldElement& b) const;

    /// Coordinates of b in the subfield basis {1, G, G^2, ..., G^(e-1)} of
    /// the big field (G its canonical primitive element): e subfield
    /// elements c_i with b = sum lift(c_i) * G^i.
    std::vector<FieldElement> decompose(const FieldElement& b) const;

   private:
    SubfieldMap(FieldPtr sub, FieldPtr sup);

    FieldPtr sub_, sup_;
    unsigned e_;
    FieldElement rho_;                      // image of the small class-of-x
    std::vector<std::uint32_t> lift_;       // small enc -> big enc
    std::vector<std::int64_t> lower_;       // big enc -> small enc or -1
    std::vector<std::vector<std::uint8_t>> decomp_;  // GF(p) matrix, coords = decomp_ * coeffs
};

}  // namespace toricbch

#endif
