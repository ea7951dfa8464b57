/**************************************************************************
 * gf.cpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "tgrs/gf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "tgrs/error.hpp"

namespace tgrs::gf {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Saturating p^m; returns 0 on overflow past 2^63.
u64 checked_power(u64 p, unsigned m) {
    u64 r = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (r > (u64{1} << 63) / p) return 0;
        r *= p;
    }
    return r;
}

// Dense polynomials over GF(p), constant term first, used for the
// irreducibility test only.
using PrimePoly = std::vector<u64>;

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = powmod(f.back(), p - 2, p);
    while (a.size() > df) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    return poly_mod(std::move(r), f, p);
}

PrimePoly poly_powmod(PrimePoly base, u64 e, const PrimePoly& f, u64 p) {
    PrimePoly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PrimePoly sub_x(PrimePoly a, u64 p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

struct CacheKey {
    u64 p;
    unsigned m;
    std::vector<u64> modulus;
    bool operator<(const CacheKey& o) const {
        return std::tie(p, m, modulus) < std::tie(o.p, o.m, o.modulus);
    }
};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> poly) {
    PrimePoly f(poly.begin(), poly.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const u64 inv_lead = powmod(f.back(), p - 2, p);
    for (auto& c : f) c = mulmod(c, inv_lead, p);
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;

    // x^(p^i) mod f for i = 1..n
    std::vector<PrimePoly> frob(n + 1);
    frob[0] = poly_mod(PrimePoly{0, 1}, f, p);
    for (std::size_t i = 1; i <= n; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);

    if (!sub_x(frob[n], p).empty()) return false;
    for (u64 r : prime_factors(n)) {
        PrimePoly g = poly_gcd(f, sub_x(frob[n / r], p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
    if (m == 1) return {0, 1};
    const u64 q = checked_power(p, m);
    if (q == 0 || q > kEnumerationCap) {
        throw Error(Errc::no_default_modulus,
                    "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                        "); supply one explicitly");
    }
    std::vector<u64> poly(m + 1, 0);
    poly[m] = 1;
    for (u64 code = 0; code < q; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < m; ++i) {
            poly[i] = c % p;
            c /= p;
        }
        if (is_irreducible(p, poly)) return poly;
    }
    throw Error(Errc::no_default_modulus, "no irreducible polynomial found");  // unreachable
}

Field FieldCtx::create(std::uint64_t p, unsigned m,
                       std::optional<std::vector<std::uint64_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
    const u64 q = checked_power(p, m);
    if (q == 0 || q > 0xFFFFFFFFull) {
        throw Error(Errc::field_too_large, "field order p^m must be below 2^32");
    }
    std::vector<u64> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1) {
            throw Error(Errc::non_monic_modulus, "modulus must have degree exactly m");
        }
        for (u64 c : mod) {
            if (c >= p) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
        }
        if (mod.back() != 1) throw Error(Errc::non_monic_modulus, "modulus must be monic");
        if (!is_irreducible(p, mod)) {
            throw Error(Errc::reducible_modulus, "modulus is reducible over GF(" +
                                                     std::to_string(p) + ")");
        }
    } else {
        mod = default_modulus(p, m);
    }

    static std::mutex mutex;
    static std::map<CacheKey, Field> cache;
    std::lock_guard lock(mutex);
    CacheKey key{p, m, mod};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Field made(new FieldCtx(p, m, std::move(mod)));
    cache.emplace(std::move(key), made);
    return made;
}

FieldCtx::FieldCtx(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), q_(checked_power(p, m)), modulus_(std::move(modulus)) {
    if (p_ == 2) {
        for (unsigned i = 0; i <= m_; ++i) {
            if (modulus_[i]) modulus_bits_ |= u64{1} << i;
        }
    }
    if (q_ <= kEnumerationCap) {
        build_tables();
    } else if (p_ != 2) {
        for (Elem a = 2; a < q_; ++a) {
            if (ref_pow(a, (q_ - 1) / 2) != 1) {
                nonresidue_ = a;
                break;
            }
        }
    }
}

Elem FieldCtx::find_generator() const {
    if (q_ == 2) return 1;
    const auto factors = prime_factors(q_ - 1);
    for (Elem g = 1; g < q_; ++g) {
        bool ok = true;
        for (u64 r : factors) {
            if (ref_pow(g, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;  // unreachable for a field
}

void FieldCtx::build_tables() {
    generator_ = find_generator();
    const u64 order = q_ - 1;
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (u64 i = 0; i < order; ++i) {
        exp_[i] = x;
        log_[x] = static_cast<Elem>(i);
        x = ref_mul(x, generator_);
    }
    if (p_ != 2 && m_ > 1) {
        zech_.assign(order, kNoLog);
        for (u64 i = 0; i < order; ++i) {
            const Elem s = ref_add(1, exp_[i]);
            zech_[i] = s == 0 ? kNoLog : log_[s];
        }
    }
    if (p_ != 2) nonresidue_ = generator_;
}

Elem FieldCtx::from_int(std::int64_t value) const noexcept {
    const auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = value % sp;
    if (r < 0) r += sp;
    return static_cast<Elem>(r);
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        const u64 s = u64{a} + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    if (!zech_.empty()) {
        if (a == 0) return b;
        if (b == 0) return a;
        const u64 order = q_ - 1;
        const u64 la = log_[a];
        const u64 lb = log_[b];
        const u64 d = (lb + order - la) % order;
        const Elem z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[(la + z) % order];
    }
    return ref_add(a, b);
}

Elem FieldCtx::neg(Elem a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    if (m_ == 1) return static_cast<Elem>(p_ - a);
    if (!exp_.empty()) {
        const u64 order = q_ - 1;
        return exp_[(log_[a] + order / 2) % order];
    }
    return ref_neg(a);
}

Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Elem>(u64{a} * b % p_);
    if (!exp_.empty()) {
        const u64 order = q_ - 1;
        u64 s = u64{log_[a]} + log_[b];
        if (s >= order) s -= order;
        return exp_[s];
    }
    return ref_mul(a, b);
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
    if (!exp_.empty()) {
        const u64 order = q_ - 1;
        return exp_[(order - log_[a]) % order];
    }
    if (m_ == 1) return static_cast<Elem>(powmod(a, p_ - 2, p_));
    return ref_pow(a, q_ - 2);
}

Elem FieldCtx::pow(Elem a, std::int64_t e) const {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw Error(Errc::negative_power_of_zero, "negative power of zero");
        return 0;
    }
    const u64 order = q_ - 1;
    u64 ee;
    if (e < 0) {
        a = inv(a);
        ee = static_cast<u64>(-(e + 1)) % order + 1;
    } else {
        ee = static_cast<u64>(e);
    }
    ee %= order;
    if (!exp_.empty()) return exp_[static_cast<u64>(log_[a]) * ee % order];
    return ref_pow(a, ee);
}

Elem FieldCtx::frobenius(Elem a, unsigned times) const {
    times %= m_;
    u64 e = 1;
    for (unsigned i = 0; i < times; ++i) e *= p_;
    return pow(a, static_cast<std::int64_t>(e));
}

bool FieldCtx::is_square(Elem a) const {
    if (a == 0 || p_ == 2) return true;
    return pow(a, static_cast<std::int64_t>((q_ - 1) / 2)) == 1;
}

std::optional<Elem> FieldCtx::sqrt(Elem a) const {
    if (a == 0) return Elem{0};
    if (p_ == 2) return pow(a, static_cast<std::int64_t>(q_ / 2));
    if (!is_square(a)) return std::nullopt;

    // Tonelli-Shanks on q - 1 = 2^s * odd
    u64 odd = q_ - 1;
    unsigned s = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++s;
    }
    const auto sodd = static_cast<std::int64_t>(odd);
    Elem c = pow(nonresidue_, sodd);
    Elem t = pow(a, sodd);
    Elem r = pow(a, (sodd + 1) / 2);
    unsigned level = s;
    while (t != 1) {
        unsigned i = 0;
        Elem tt = t;
        while (tt != 1) {
            tt = mul(tt, tt);
            ++i;
        }
        Elem b = c;
        for (unsigned j = 0; j + i + 1 < level; ++j) b = mul(b, b);
        level = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return std::min(r, neg(r));
}

std::vector<std::uint64_t> FieldCtx::digits(Elem a) const {
    std::vector<u64> out(m_);
    u64 x = a;
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = x % p_;
        x /= p_;
    }
    return out;
}

Elem FieldCtx::from_digits(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > m_) throw Error(Errc::invalid_argument, "too many coefficients");
    u64 r = 0;
    u64 scale = 1;
    for (u64 c : coeffs) {
        if (c >= p_) throw Error(Errc::invalid_argument, "coefficient out of range");
        r += c * scale;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldCtx::ref_add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    u64 x = a, y = b, r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldCtx::ref_neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    u64 x = a, r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldCtx::ref_mul(Elem a, Elem b) const noexcept {
    if (m_ == 1) return static_cast<Elem>(mulmod(a, b, p_));
    if (p_ == 2) {
        u64 acc = 0;
        for (unsigned i = 0; i < m_; ++i) {
            if ((b >> i) & 1) acc ^= u64{a} << i;
        }
        for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d) {
            if ((acc >> d) & 1) acc ^= modulus_bits_ << (d - m_);
        }
        return static_cast<Elem>(acc);
    }
    std::array<u64, 64> da{}, db{}, prod{};
    u64 x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
        }
    }
    for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d) {
        const u64 c = prod[d];
        if (c == 0) continue;
        const unsigned shift = d - m_;
        for (unsigned j = 0; j <= m_; ++j) {
            prod[shift + j] = (prod[shift + j] + p_ - mulmod(c, modulus_[j], p_)) % p_;
        }
    }
    u64 r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += prod[i] * scale;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldCtx::ref_pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = ref_mul(r, a);
        a = ref_mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (m_ > 1) os << "^" << m_;
    os << ")";
    if (m_ > 1) {
        os << " mod ";
        bool first = true;
        for (int i = static_cast<int>(m_); i >= 0; --i) {
            const u64 c = modulus_[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

Fe::Fe(const FieldCtx& field, Elem value) : field_(&field), value_(value) {
    if (!field.contains(value)) {
        throw Error(Errc::invalid_argument,
                    "packed value " + std::to_string(value) + " outside " + field.describe());
    }
}

std::optional<Fe> Fe::sqrt() const {
    auto r = field_->sqrt(value_);
    if (!r) return std::nullopt;
    return Fe(*field_, *r);
}

Fe operator+(const Fe& a, const Fe& b) {
    require_same_field(*a.field_, *b.field_);
    return {*a.field_, a.field_->add(a.value_, b.value_)};
}

Fe operator-(const Fe& a, const Fe& b) {
    require_same_field(*a.field_, *b.field_);
    return {*a.field_, a.field_->sub(a.value_, b.value_)};
}

Fe operator*(const Fe& a, const Fe& b) {
    require_same_field(*a.field_, *b.field_);
    return {*a.field_, a.field_->mul(a.value_, b.value_)};
}

Fe operator/(const Fe& a, const Fe& b) {
    require_same_field(*a.field_, *b.field_);
    return {*a.field_, a.field_->div(a.value_, b.value_)};
}

void require_same_field(const FieldCtx& a, const FieldCtx& b) {
    if (&a != &b && !(a == b)) {
        throw Error(Errc::context_mismatch,
                    "operands live in " + a.describe() + " and " + b.describe());
    }
}

std::vector<Elem> enumerate_field(const FieldCtx& field) {
    if (field.order() > kEnumerationCap) {
        throw Error(Errc::field_too_large, field.describe() + " is too large to enumerate");
    }
    std::vector<Elem> out(field.order());
    for (std::uint64_t a = 0; a < field.order(); ++a) out[a] = static_cast<Elem>(a);
    return out;
}

std::vector<Elem> subfield_elements(const FieldCtx& field, unsigned s) {
    if (s == 0 || field.m() % s != 0) {
        throw Error(Errc::not_a_divisor, std::to_string(s) + " does not divide " +
                                             std::to_string(field.m()));
    }
    std::vector<Elem> out;
    for (Elem a : enumerate_field(field)) {
        if (field.frobenius(a, s) == a) out.push_back(a);
    }
    return out;
}

Embedding::Embedding(Field small, Field big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_->p() != big_->p()) {
        throw Error(Errc::context_mismatch, "embedding between different characteristics");
    }
    if (big_->m() % small_->m() != 0) {
        throw Error(Errc::not_a_divisor, small_->describe() + " is not a subfield of " +
                                             big_->describe());
    }
    if (small_->m() == 1) return;
    const auto& f = small_->modulus();
    for (Elem x : enumerate_field(*big_)) {
        Elem acc = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
            acc = big_->add(big_->mul(acc, x), big_->from_int(static_cast<std::int64_t>(f[i])));
        }
        if (acc == 0) {
            root_ = x;
            return;
        }
    }
    throw Error(Errc::not_split, "modulus of " + small_->describe() + " has no root in " +
                                     big_->describe());
}

Elem Embedding::operator()(Elem a) const {
    if (!small_->contains(a)) throw Error(Errc::invalid_argument, "element outside source field");
    if (small_->m() == 1) return big_->from_int(a);
    const auto d = small_->digits(a);
    Elem acc = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        acc = big_->add(big_->mul(acc, root_), big_->from_int(static_cast<std::int64_t>(d[i])));
    }
    return acc;
}

}  // namespace tgrs::gf
