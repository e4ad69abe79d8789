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

#include "toricbch/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricbch {

Poly::Poly(FieldPtr f, std::vector<FieldElement> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (&c.field() != f_.get())
            throw std::invalid_argument("Poly: coefficient from a different field");
    prune();
}

void Poly::prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_encs(const FieldPtr& f, std::span<const std::uint32_t> encs) {
    std::vector<FieldElement> cs;
    cs.reserve(encs.size());
    for (auto e : encs) cs.push_back(f->element(e));
    return Poly(f, std::move(cs));
}

Poly Poly::x_pow_n_minus_one(const FieldPtr& f, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("x_pow_n_minus_one: n must be positive");
    std::vector<FieldElement> cs(n + 1, f->zero());
    cs[0] = -f->one();
    cs[n] = f->one();
    return Poly(f, std::move(cs));
}

FieldElement Poly::leading() const {
    if (is_zero()) throw std::invalid_argument("Poly::leading: zero polynomial");
    return c_.back();
}

std::vector<std::uint32_t> Poly::encs() const {
    std::vector<std::uint32_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.enc());
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("Poly: mixed fields");
    std::vector<FieldElement> cs(std::max(c_.size(), o.c_.size()), f_->zero());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
    return Poly(f_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("Poly: mixed fields");
    std::vector<FieldElement> cs(std::max(c_.size(), o.c_.size()), f_->zero());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) - o.coeff(i);
    return Poly(f_, std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("Poly: mixed fields");
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<FieldElement> cs(c_.size() + o.c_.size() - 1, f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) cs[i + j] += c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(cs));
}

Poly Poly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> cs(c_);
    for (auto& c : cs) c *= s;
    return Poly(f_, std::move(cs));
}

bool Poly::operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

std::pair<Poly, Poly> Poly::divmod(const Poly& f, const Poly& d) {
    if (f.f_ != d.f_) throw std::invalid_argument("Poly::divmod: mixed fields");
    if (d.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    if (f.degree() < d.degree()) return {Poly(f.f_), f};
    std::vector<FieldElement> rem = f.c_;
    std::vector<FieldElement> quo(f.c_.size() - d.c_.size() + 1, f.f_->zero());
    const FieldElement ilead = d.leading().inverse();
    for (std::size_t top = rem.size(); top >= d.c_.size(); --top) {
        const FieldElement c = rem[top - 1] * ilead;
        if (!c.is_zero()) {
            const std::size_t shift = top - d.c_.size();
            quo[shift] = c;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rem[shift + i] -= c * d.c_[i];
        }
    }
    return {Poly(f.f_, std::move(quo)), Poly(f.f_, std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw std::invalid_argument("Poly::gcd: mixed fields");
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("Poly::gcd: both inputs are zero");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    return ((a / gcd(a, b)) * b).monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("Poly::monic: zero polynomial");
    return *this * leading().inverse();
}

Poly Poly::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Poly::reciprocal: zero polynomial");
    if (coeff(0).is_zero())
        throw std::invalid_argument("Poly::reciprocal: zero constant term");
    std::vector<FieldElement> cs(c_.rbegin(), c_.rend());
    return Poly(f_, std::move(cs));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = f_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

FieldElement Poly::eval_lifted(const FieldElement& x) const {
    const Field& big = x.field();
    if (&big == f_.get()) return eval(x);
    const auto& emb = SubfieldMap::get(f_, Field::make(big.characteristic(), big.degree()));
    FieldElement acc = big.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + emb.lift(c_[i]);
    return acc;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t n, std::uint64_t q) {
    if (n == 0) throw std::invalid_argument("cyclotomic_coset: n must be positive");
    if (std::gcd(q % n == 0 ? n : q % n, n) != 1)
        throw std::invalid_argument("cyclotomic_coset: gcd(q, n) != 1");
    std::vector<std::uint64_t> orbit;
    std::uint64_t c = i % n;
    do {
        orbit.push_back(c);
        c = (c * q) % n;
    } while (c != i % n);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

Poly minimal_polynomial(const FieldElement& beta, const FieldPtr& base) {
    const Field& big = beta.field();
    const FieldPtr big_ptr = Field::make(big.characteristic(), big.degree());
    const auto& emb = SubfieldMap::get(base, big_ptr);

    if (beta.is_zero()) {
        // x
        return Poly(base, {base->zero(), base->one()});
    }
    const std::uint64_t qs = base->size();
    std::vector<FieldElement> orbit{beta};
    for (FieldElement cur = beta.pow(qs); cur != beta; cur = cur.pow(qs)) orbit.push_back(cur);

    // product of (x - r) over the orbit, in the big field
    std::vector<FieldElement> poly{big_ptr->one()};
    for (const auto& r : orbit) {
        poly.insert(poly.begin(), big_ptr->zero());
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) poly[i] += poly[i + 1] * (-r);
    }

    std::vector<FieldElement> lowered;
    lowered.reserve(poly.size());
    for (const auto& c : poly) lowered.push_back(emb.lower(c));
    return Poly(base, std::move(lowered));
}

}  // namespace toricbch
