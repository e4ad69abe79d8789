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

#include "toricbch/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toricbch/numeric.hpp"

namespace toricbch {

void CyclicCode::validate_length(const FieldPtr& f, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("CyclicCode: length must be positive");
    if (std::gcd(n, f->size()) != 1)
        throw std::invalid_argument("CyclicCode: gcd(n, q) must be 1");
}

CyclicCode::CyclicCode(FieldPtr f, std::uint64_t n, Poly g, Poly h, unsigned e)
    : f_(std::move(f)), n_(n), g_(std::move(g)), h_(std::move(h)), e_(e) {
    if (g_ * h_ != Poly::x_pow_n_minus_one(f_, n_))
        throw std::logic_error("CyclicCode: g * h != x^n - 1");
    compute_zero_set();
}

FieldPtr CyclicCode::splitting_field() const {
    return Field::make(f_->characteristic(), f_->degree() * e_);
}

FieldElement CyclicCode::alpha() const { return nth_root_of_unity(splitting_field(), n_); }

void CyclicCode::compute_zero_set() {
    const FieldElement a = alpha();
    const Field& big = a.field();
    zeros_.clear();
    FieldElement point = big.one();
    for (std::uint64_t i = 0; i < n_; ++i) {
        if (g_.eval_lifted(point).is_zero()) zeros_.push_back(i);
        point = point * a;
    }
    if (zeros_.size() != static_cast<std::size_t>(g_.degree()))
        throw std::logic_error("CyclicCode: zero set does not match deg g");
}

CyclicCode CyclicCode::from_parity_check(std::uint64_t n, const Poly& h) {
    const FieldPtr& f = h.field();
    validate_length(f, n);
    if (h.is_zero()) throw std::invalid_argument("from_parity_check: h is zero");
    const Poly hm = h.monic();
    const auto [g, rem] = Poly::divmod(Poly::x_pow_n_minus_one(f, n), hm);
    if (!rem.is_zero())
        throw std::invalid_argument("from_parity_check: h does not divide x^n - 1");
    const unsigned e = static_cast<unsigned>(mul_order_mod(f->size() % n, n));
    return CyclicCode(f, n, g, hm, e);
}

CyclicCode CyclicCode::bch(const FieldPtr& f, std::uint64_t n, std::uint64_t d_star,
                           std::uint64_t b) {
    validate_length(f, n);
    if (d_star == 0) throw std::invalid_argument("bch: designed distance must be >= 1");
    const unsigned e = static_cast<unsigned>(mul_order_mod(f->size() % n, n));
    const FieldPtr big = Field::make(f->characteristic(), f->degree() * e);
    const FieldElement a = nth_root_of_unity(big, n);

    Poly g(f, {f->one()});
    for (std::uint64_t j = b; j + 1 < b + d_star; ++j)
        g = Poly::lcm(g, minimal_polynomial(a.pow(j % n), f));
    const Poly h = Poly::x_pow_n_minus_one(f, n) / g;
    CyclicCode code(f, n, g, h, e);

    // the zero set must be exactly the q-closure of the designed exponents
    std::vector<std::uint64_t> expect;
    for (std::uint64_t j = b; j + 1 < b + d_star; ++j) {
        const auto coset = cyclotomic_coset(j % n, n, f->size());
        expect.insert(expect.end(), coset.begin(), coset.end());
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    if (expect != code.zeros_)
        throw std::logic_error("bch: zero set disagrees with the cyclotomic cosets");
    return code;
}

BchParams CyclicCode::designed_params() const {
    if (zeros_.empty()) return {1, 0, true};
    if (zeros_.size() == n_) return {n_ + 1, 0, true};  // zero code [n, 0]

    std::vector<bool> z(n_, false);
    for (auto i : zeros_) z[i] = true;
    std::uint64_t best_len = 0, best_b = 0;
    bool unique = true;
    for (std::uint64_t s = 0; s < n_; ++s) {
        if (!z[s] || z[(s + n_ - 1) % n_]) continue;  // only run starts
        std::uint64_t len = 0;
        while (z[(s + len) % n_]) ++len;
        if (len > best_len) {
            best_len = len;
            best_b = s;
            unique = true;
        } else if (len == best_len) {
            unique = false;
        }
    }
    return {best_len + 1, best_b, unique};
}

CyclicCode CyclicCode::dual() const {
    CyclicCode d = from_parity_check(n_, g_.reciprocal().monic());
    if (d.generator() != h_.reciprocal().monic())
        throw std::logic_error("dual: generator is not the reciprocal of h");
    std::vector<std::uint64_t> expect;
    std::vector<bool> z(n_, false);
    for (auto i : zeros_) z[i] = true;
    for (std::uint64_t i = 0; i < n_; ++i)
        if (!z[i]) expect.push_back((n_ - i) % n_);
    std::sort(expect.begin(), expect.end());
    if (expect != d.zeros_)
        throw std::logic_error("dual: zero set does not match the negated nonzeros");
    return d;
}

bool CyclicCode::is_lcd() const {
    const bool self_reciprocal = g_ == g_.reciprocal().monic();
    const Matrix stacked = Matrix::vstack(generator_matrix(), dual().generator_matrix());
    const bool full_rank = stacked.rank() == n_;
    if (self_reciprocal != full_rank)
        throw std::logic_error("is_lcd: the two criteria disagree");
    return self_reciprocal;
}

std::vector<FieldElement> CyclicCode::encode(std::span<const FieldElement> message) const {
    if (message.size() != dimension())
        throw std::invalid_argument("encode: message length != k");
    const Poly m(f_, std::vector<FieldElement>(message.begin(), message.end()));
    const Poly c = m * g_;  // deg < n, no reduction needed
    std::vector<FieldElement> word(n_, f_->zero());
    for (std::size_t i = 0; i < static_cast<std::size_t>(c.degree() + 1); ++i)
        word[i] = c.coeff(i);
    return word;
}

Matrix CyclicCode::generator_matrix() const {
    const std::uint64_t k = dimension();
    Matrix gm(f_, k, n_);
    for (std::uint64_t r = 0; r < k; ++r)
        for (std::int64_t i = 0; i <= g_.degree(); ++i)
            gm.at(r, r + static_cast<std::uint64_t>(i)) = g_.coeff(static_cast<std::size_t>(i));
    return gm;
}

// ---- linear codes ----------------------------------------------------------

LinearCode::LinearCode(FieldPtr f, std::uint64_t n, Matrix rows)
    : f_(std::move(f)), n_(n), rows_(std::move(rows)) {
    if (rows_.cols() != n_) throw std::invalid_argument("LinearCode: column count != n");
}

std::uint64_t LinearCode::dimension() const {
    if (rank_ < 0) rank_ = static_cast<std::int64_t>(rows_.rank());
    return static_cast<std::uint64_t>(rank_);
}

LinearCode p1_toric_code(const FieldPtr& f, std::uint64_t r, std::uint64_t s) {
    const std::uint64_t n = f->size() - 1;
    if (r + s >= n)
        throw std::invalid_argument("p1_toric_code: need r + s < q - 1");
    Matrix rows(f, r + s + 1, n);
    const FieldElement gamma = f->generator();
    for (std::uint64_t idx = 0; idx <= r + s; ++idx) {
        const std::int64_t j = static_cast<std::int64_t>(idx) - static_cast<std::int64_t>(r);
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::int64_t e = (static_cast<std::int64_t>(i) * j) % static_cast<std::int64_t>(n);
            const std::uint64_t exp = static_cast<std::uint64_t>((e + static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n));
            rows.at(idx, i) = gamma.pow(exp);
        }
    }
    return LinearCode(f, n, std::move(rows));
}

LinearCode puncture(const LinearCode& code, std::span<const std::size_t> keep) {
    if (keep.empty()) throw std::invalid_argument("puncture: empty coordinate set");
    for (auto i : keep)
        if (i >= code.length()) throw std::invalid_argument("puncture: coordinate out of range");
    Matrix rows(code.field(), code.rows().rows(), keep.size());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) rows.at(r, c) = code.rows().at(r, keep[c]);
    return LinearCode(code.field(), keep.size(), std::move(rows));
}

LinearCode subfield_subcode(const LinearCode& code, const FieldPtr& base) {
    const FieldPtr& big = code.field();
    if (base->characteristic() != big->characteristic() ||
        big->degree() % base->degree() != 0)
        throw std::invalid_argument("subfield_subcode: base is not a subfield");
    const auto& emb = SubfieldMap::get(base, big);
    const unsigned e = emb.relative_degree();
    const std::size_t n = static_cast<std::size_t>(code.length());

    const Matrix checks = code.rows().kernel_basis();
    Matrix expanded(base, checks.rows() * e, n);
    for (std::size_t r = 0; r < checks.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const auto coords = emb.decompose(checks.at(r, c));
            for (unsigned t = 0; t < e; ++t) expanded.at(r * e + t, c) = coords[t];
        }
    }
    return LinearCode(base, n, expanded.kernel_basis());
}

std::optional<Poly> cyclic_generator(const LinearCode& code) {
    const std::uint64_t n = code.length();
    Poly g = Poly::x_pow_n_minus_one(code.field(), n);
    for (std::size_t r = 0; r < code.rows().rows(); ++r) {
        std::vector<FieldElement> cs;
        cs.reserve(n);
        for (std::size_t c = 0; c < n; ++c) cs.push_back(code.rows().at(r, c));
        const Poly row(code.field(), std::move(cs));
        if (!row.is_zero()) g = Poly::gcd(g, row);
    }
    if (n - static_cast<std::uint64_t>(g.degree()) != code.dimension()) return std::nullopt;
    return g;
}

}  // namespace toricbch
