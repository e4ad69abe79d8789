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

#include "toricbch/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "toricbch/numeric.hpp"

namespace toricbch {

namespace {

constexpr std::uint64_t kTableLimit = 1ull << 16;

// ---- polynomial arithmetic over the prime field GF(p), used only for the
// ---- canonical-modulus search (coefficients low-degree first, normalized)

using PPoly = std::vector<std::uint8_t>;

void pp_norm(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint8_t mod_inv_prime(std::uint64_t a, std::uint64_t p) {
    // p is prime and small; a != 0 mod p
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint8_t>(r);
}

PPoly pp_mod(PPoly f, const PPoly& mod, std::uint64_t p) {
    pp_norm(f);
    const std::size_t dm = mod.size() - 1;
    const std::uint8_t ilead = mod_inv_prime(mod.back(), p);
    while (f.size() > dm) {
        const std::size_t shift = f.size() - 1 - dm;
        const std::uint64_t c = f.back() * ilead % p;
        for (std::size_t i = 0; i < mod.size(); ++i) {
            std::uint64_t v = f[i + shift] + (p - c * mod[i] % p);
            f[i + shift] = static_cast<std::uint8_t>(v % p);
        }
        pp_norm(f);
    }
    return f;
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
    PPoly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint8_t>(acc[i] % p);
    return pp_mod(std::move(r), mod, p);
}

PPoly pp_powmod(PPoly base, std::uint64_t e, const PPoly& mod, std::uint64_t p) {
    PPoly r{1};
    base = pp_mod(std::move(base), mod, p);
    while (e) {
        if (e & 1) r = pp_mulmod(r, base, mod, p);
        base = pp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PPoly pp_sub(PPoly a, const PPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint8_t>((a[i] + p - b[i]) % p);
    pp_norm(a);
    return a;
}

PPoly pp_gcd(PPoly a, PPoly b, std::uint64_t p) {
    pp_norm(a);
    pp_norm(b);
    while (!b.empty()) {
        a = pp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool pp_is_irreducible(const PPoly& f, std::uint64_t p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    // iterated Frobenius images of x modulo f
    std::vector<PPoly> frob(m + 1);
    frob[0] = PPoly{0, 1};
    for (unsigned i = 1; i <= m; ++i) frob[i] = pp_powmod(frob[i - 1], p, f, p);
    const PPoly x{0, 1};
    if (pp_sub(frob[m], x, p) != PPoly{}) return false;
    for (std::uint64_t l : distinct_prime_factors(m)) {
        PPoly diff = pp_sub(frob[m / l], x, p);
        PPoly g = pp_gcd(std::move(diff), f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

bool pp_is_primitive(const PPoly& f, std::uint64_t p,
                     const std::vector<std::uint64_t>& unit_factors) {
    if (f[0] == 0) return false;
    if (!pp_is_irreducible(f, p)) return false;
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) order *= p;
    --order;
    for (std::uint64_t r : unit_factors) {
        if (pp_powmod(PPoly{0, 1}, order / r, f, p) == PPoly{1}) return false;
    }
    return true;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto fs = distinct_prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t r : fs) {
            std::uint64_t e = (p - 1) / r, b = g, acc = 1;
            while (e) {
                if (e & 1) acc = acc * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("least_primitive_root: no primitive root found");
}

}  // namespace

// ---- FieldElement ----------------------------------------------------------

const Field& FieldElement::field() const {
    if (!f_) throw std::logic_error("FieldElement: default-constructed element has no field");
    return *f_;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("FieldElement: operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    return field().element(f_->add_enc(enc_, o.enc_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    return field().element(f_->sub_enc(enc_, o.enc_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    return field().element(f_->mul_enc(enc_, o.enc_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(*this, o);
    return field().element(f_->mul_enc(enc_, f_->inv_enc(o.enc_)));
}

FieldElement FieldElement::operator-() const { return field().element(f_->neg_enc(enc_)); }

FieldElement FieldElement::inverse() const { return field().element(f_->inv_enc(enc_)); }

FieldElement FieldElement::pow(std::uint64_t e) const {
    return field().element(f_->pow_enc(enc_, e));
}

FieldElement FieldElement::frobenius() const { return pow(field().characteristic()); }

std::vector<std::uint8_t> FieldElement::coeffs() const {
    const Field& f = field();
    std::vector<std::uint8_t> cs(f.degree());
    std::uint32_t v = enc_;
    for (unsigned i = 0; i < f.degree(); ++i) {
        cs[i] = static_cast<std::uint8_t>(v % f.characteristic());
        v /= static_cast<std::uint32_t>(f.characteristic());
    }
    return cs;
}

// ---- Field -----------------------------------------------------------------

Field::Field(std::uint64_t p, unsigned m) : p_(p), m_(m) {
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > kMaxSize) throw std::invalid_argument("Field: p^m exceeds the supported bound");
    }
    unit_factors_ = distinct_prime_factors(q_ - 1);

    pow_p_.resize(m + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= m; ++i) pow_p_[i] = pow_p_[i - 1] * static_cast<std::uint32_t>(p);

    if (m == 1) {
        const std::uint64_t g0 = least_primitive_root(p);
        modulus_ = {static_cast<std::uint8_t>((p - g0 % p) % p), 1};  // x - g0
        gamma_ = static_cast<std::uint32_t>(g0);
        return;
    }

    // lexicographically smallest monic primitive modulus
    for (std::uint64_t key = 0; key < q_; ++key) {
        if (key % p == 0) continue;  // constant term must be nonzero
        PPoly f(m + 1);
        std::uint64_t v = key;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint8_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (pp_is_primitive(f, p, unit_factors_)) {
            modulus_ = std::move(f);
            gamma_ = static_cast<std::uint32_t>(p);
            return;
        }
    }
    throw std::logic_error("Field: no primitive polynomial found");
}

FieldPtr Field::make(std::uint64_t p, unsigned m) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("Field::make: characteristic " + std::to_string(p) +
                                    " is not prime");
    if (m < 1) throw std::invalid_argument("Field::make: extension degree must be >= 1");

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[{p, m}];
    if (!slot) slot = FieldPtr(new Field(p, m));
    return slot;
}

FieldElement Field::element(std::uint32_t enc) const {
    if (enc >= q_) throw std::invalid_argument("Field::element: encoding out of range");
    return FieldElement(this, enc);
}

FieldElement Field::from_int(std::uint64_t c) const {
    return FieldElement(this, static_cast<std::uint32_t>(c % p_));
}

FieldElement Field::from_coeffs(std::span<const std::uint8_t> cs) const {
    if (cs.size() > m_) throw std::invalid_argument("Field::from_coeffs: too many coefficients");
    std::uint32_t enc = 0;
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] >= p_) throw std::invalid_argument("Field::from_coeffs: coefficient >= p");
        enc = enc * static_cast<std::uint32_t>(p_) + cs[i];
    }
    return FieldElement(this, enc);
}

std::uint32_t Field::add_enc(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const std::uint32_t da = a % static_cast<std::uint32_t>(p_);
        const std::uint32_t db = b % static_cast<std::uint32_t>(p_);
        std::uint32_t s = da + db;
        if (s >= p_) s -= static_cast<std::uint32_t>(p_);
        r += s * pow_p_[i];
        a /= static_cast<std::uint32_t>(p_);
        b /= static_cast<std::uint32_t>(p_);
    }
    return r;
}

std::uint32_t Field::neg_enc(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const std::uint32_t da = a % static_cast<std::uint32_t>(p_);
        r += (da == 0 ? 0 : static_cast<std::uint32_t>(p_) - da) * pow_p_[i];
        a /= static_cast<std::uint32_t>(p_);
    }
    return r;
}

std::uint32_t Field::sub_enc(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_enc(a, neg_enc(b));
}

std::uint32_t Field::mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::array<std::uint8_t, 24> da{}, db{};
    std::array<std::uint32_t, 48> acc{};
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = static_cast<std::uint8_t>(a % p_);
        db[i] = static_cast<std::uint8_t>(b % p_);
        a /= static_cast<std::uint32_t>(p_);
        b /= static_cast<std::uint32_t>(p_);
    }
    for (unsigned i = 0; i < m_; ++i)
        if (da[i])
            for (unsigned j = 0; j < m_; ++j) acc[i + j] += da[i] * db[j];
    std::array<std::uint8_t, 48> d{};
    for (unsigned i = 0; i < 2 * m_ - 1; ++i) d[i] = static_cast<std::uint8_t>(acc[i] % p_);
    // reduce modulo the (monic) field modulus
    for (unsigned deg = 2 * m_ - 2; deg + 1 > m_; --deg) {
        const std::uint8_t c = d[deg];
        if (c) {
            d[deg] = 0;
            const unsigned shift = deg - m_;
            for (unsigned i = 0; i < m_; ++i)
                d[shift + i] =
                    static_cast<std::uint8_t>((d[shift + i] + (p_ - c * modulus_[i] % p_)) % p_);
        }
    }
    std::uint32_t r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * static_cast<std::uint32_t>(p_) + d[i];
    return r;
}

void Field::build_tables() const {
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + q_ - 1] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_schoolbook(cur, gamma_);
    }
    if (cur != 1) throw std::logic_error("Field: generator does not have full order");
    tables_built_ = true;
}

std::uint32_t Field::mul_enc(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (q_ <= kTableLimit) {
        std::call_once(tables_once_, [this] { build_tables(); });
        return exp_[log_[a] + log_[b]];
    }
    return mul_schoolbook(a, b);
}

std::uint32_t Field::inv_enc(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Field: zero has no inverse");
    if (q_ <= kTableLimit) {
        std::call_once(tables_once_, [this] { build_tables(); });
        return exp_[q_ - 1 - log_[a]];
    }
    return pow_enc(a, q_ - 2);
}

std::uint32_t Field::pow_enc(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_enc(r, a);
        a = mul_enc(a, a);
        e >>= 1;
    }
    return r;
}

// ---- free operations -------------------------------------------------------

std::uint64_t element_order(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("element_order: zero input");
    const Field& f = a.field();
    std::uint64_t t = f.size() - 1;
    for (std::uint64_t r : f.unit_order_factors()) {
        while (t % r == 0 && a.pow(t / r) == f.one()) t /= r;
    }
    return t;
}

FieldElement nth_root_of_unity(const FieldPtr& f, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("nth_root_of_unity: n must be positive");
    if ((f->size() - 1) % n != 0)
        throw std::invalid_argument("nth_root_of_unity: n does not divide p^m - 1");
    return f->generator().pow((f->size() - 1) / n);
}

FieldElement trace_to_subfield(const FieldElement& a, unsigned sub_degree) {
    const Field& f = a.field();
    if (sub_degree == 0 || f.degree() % sub_degree != 0)
        throw std::invalid_argument("trace_to_subfield: sub_degree does not divide m");
    std::uint64_t qs = 1;
    for (unsigned i = 0; i < sub_degree; ++i) qs *= f.characteristic();
    FieldElement acc = a, cur = a;
    for (unsigned i = 1; i < f.degree() / sub_degree; ++i) {
        cur = cur.pow(qs);
        acc += cur;
    }
    return acc;
}

// ---- SubfieldMap -----------------------------------------------------------

SubfieldMap::SubfieldMap(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->characteristic() != sup_->characteristic() ||
        sup_->degree() % sub_->degree() != 0)
        throw std::invalid_argument("SubfieldMap: not a subfield pair");
    if (sub_->size() > kTableLimit)
        throw std::invalid_argument("SubfieldMap: subfield too large");
    e_ = sup_->degree() / sub_->degree();

    // rho = minimal-encoding root of the small modulus among the elements of
    // multiplicative order dividing q_sub - 1
    const std::uint64_t t = (sup_->size() - 1) / (sub_->size() - 1);
    const FieldElement g = sup_->generator().pow(t);
    bool found = false;
    std::uint32_t best = 0;
    FieldElement cand = sup_->one();
    for (std::uint64_t k = 0; k < sub_->size() - 1; ++k, cand = cand * g) {
        FieldElement acc = sup_->zero();
        for (std::size_t i = sub_->modulus().size(); i-- > 0;)
            acc = acc * cand + sup_->from_int(sub_->modulus()[i]);
        if (acc.is_zero() && (!found || cand.enc() < best)) {
            best = cand.enc();
            found = true;
        }
    }
    if (!found) throw std::logic_error("SubfieldMap: modulus has no root in the extension");
    rho_ = sup_->element(best);

    lift_.resize(sub_->size());
    lower_.assign(sup_->size(), -1);
    for (std::uint64_t e = 0; e < sub_->size(); ++e) {
        FieldElement acc = sup_->zero();
        FieldElement x = sub_->element(static_cast<std::uint32_t>(e));
        const auto cs = x.coeffs();
        for (std::size_t i = cs.size(); i-- > 0;) acc = acc * rho_ + sup_->from_int(cs[i]);
        lift_[e] = acc.enc();
        lower_[acc.enc()] = static_cast<std::int64_t>(e);
    }

    // change of basis: coefficient vectors of G^i * rho^j span GF(p)^M
    const unsigned M = sup_->degree();
    const unsigned ms = sub_->degree();
    const auto p = sup_->characteristic();
    std::vector<std::vector<std::uint8_t>> aug(M, std::vector<std::uint8_t>(2 * M, 0));
    for (unsigned i = 0; i < e_; ++i) {
        for (unsigned j = 0; j < ms; ++j) {
            const FieldElement prod = sup_->generator().pow(i) * rho_.pow(j);
            const auto cs = prod.coeffs();
            for (unsigned r = 0; r < M; ++r) aug[r][i * ms + j] = cs[r];
        }
    }
    for (unsigned r = 0; r < M; ++r) aug[r][M + r] = 1;
    // Gauss-Jordan over GF(p)
    unsigned row = 0;
    for (unsigned col = 0; col < M && row < M; ++col) {
        unsigned pivot = row;
        while (pivot < M && aug[pivot][col] == 0) ++pivot;
        if (pivot == M) continue;
        std::swap(aug[row], aug[pivot]);
        const std::uint8_t il = mod_inv_prime(aug[row][col], p);
        for (auto& v : aug[row]) v = static_cast<std::uint8_t>(v * il % p);
        for (unsigned r = 0; r < M; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            const std::uint8_t c = aug[r][col];
            for (unsigned cc = 0; cc < 2 * M; ++cc)
                aug[r][cc] = static_cast<std::uint8_t>((aug[r][cc] + p - c * aug[row][cc] % p) % p);
        }
        ++row;
    }
    if (row != M) throw std::logic_error("SubfieldMap: basis matrix is singular");
    decomp_.assign(M, std::vector<std::uint8_t>(M));
    for (unsigned r = 0; r < M; ++r)
        for (unsigned c = 0; c < M; ++c) decomp_[r][c] = aug[r][M + c];
}

const SubfieldMap& SubfieldMap::get(const FieldPtr& sub, const FieldPtr& sup) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
                    std::unique_ptr<SubfieldMap>>
        registry;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(sub->characteristic(), sub->degree(), sup->degree());
    auto& slot = registry[key];
    if (!slot) slot = std::unique_ptr<SubfieldMap>(new SubfieldMap(sub, sup));
    return *slot;
}

FieldElement SubfieldMap::lift(const FieldElement& a) const {
    if (&a.field() != sub_.get())
        throw std::invalid_argument("SubfieldMap::lift: element not in the subfield");
    return sup_->element(lift_[a.enc()]);
}

bool SubfieldMap::in_subfield(const FieldElement& b) const {
    if (&b.field() != sup_.get())
        throw std::invalid_argument("SubfieldMap: element not in the extension field");
    return lower_[b.enc()] >= 0;
}

FieldElement SubfieldMap::lower(const FieldElement& b) const {
    if (!in_subfield(b))
        throw std::invalid_argument("SubfieldMap::lower: element is not in the subfield image");
    return sub_->element(static_cast<std::uint32_t>(lower_[b.enc()]));
}

std::vector<FieldElement> SubfieldMap::decompose(const FieldElement& b) const {
    if (&b.field() != sup_.get())
        throw std::invalid_argument("SubfieldMap::decompose: element not in the extension field");
    const unsigned M = sup_->degree();
    const unsigned ms = sub_->degree();
    const auto p = sup_->characteristic();
    const auto cs = b.coeffs();
    std::vector<std::uint8_t> d(M, 0);
    for (unsigned r = 0; r < M; ++r) {
        std::uint32_t acc = 0;
        for (unsigned c = 0; c < M; ++c) acc += decomp_[r][c] * cs[c];
        d[r] = static_cast<std::uint8_t>(acc % p);
    }
    std::vector<FieldElement> out;
    out.reserve(e_);
    for (unsigned i = 0; i < e_; ++i) {
        std::uint32_t enc = 0;
        for (unsigned j = ms; j-- > 0;)
            enc = enc * static_cast<std::uint32_t>(p) + d[i * ms + j];
        out.push_back(sub_->element(enc));
    }
    return out;
}

}  // namespace toricbch
