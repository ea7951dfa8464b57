/**************************************************************************
 * gf.hpp
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

#pragma once

/*
 * Exact arithmetic in GF(p^m) = GF(p)[x]/(f(x)), f monic irreducible of
 * degree m.
 *
 * Elements are stored packed: the coefficient vector (c_0, ..., c_{m-1}) in
 * the polynomial basis 1, x, ..., x^{m-1} maps to the integer
 * sum c_i * p^i. The packed integer is the canonical representative, so two
 * elements of one field are equal iff their packed values are equal, and
 * "packed order" is plain integer order.
 *
 * Fields with q <= 2^20 carry exp/log (and, for odd p with m > 1, Zech)
 * tables; larger fields fall back to polynomial-basis arithmetic. Both
 * routes are exposed so tests can compare them.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tgrs::gf {

using Elem = std::uint32_t;

/// Largest field order for table-backed arithmetic and for any operation
/// that scans the whole field.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 20;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
public:
    /// Builds (or fetches from the process-wide cache) GF(p^m). When the
    /// modulus is omitted the lexicographically least monic irreducible of
    /// degree m is used; for m > 1 that table only covers p^m <= 2^20.
    static Field create(std::uint64_t p, unsigned m,
                        std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

    std::uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }
    /// Monic modulus, constant term first, length m + 1.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !exp_.empty(); }
    bool is_char2() const noexcept { return p_ == 2; }

    bool operator==(const FieldCtx& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    bool contains(std::uint64_t a) const noexcept { return a < q_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t value) const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws Errc::division_by_zero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// 0^0 == 1. Negative exponents of zero throw Errc::negative_power_of_zero.
    Elem pow(Elem a, std::int64_t e) const;
    /// a^(p^times).
    Elem frobenius(Elem a, unsigned times) const;

    bool is_square(Elem a) const;
    /// Characteristic 2: the unique root a^(2^(m-1)). Odd characteristic:
    /// the root with the smaller packed value, or nullopt for non-residues.
    std::optional<Elem> sqrt(Elem a) const;

    std::vector<std::uint64_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint64_t> coeffs) const;

    // Polynomial-basis reference arithmetic; never consults the tables.
    Elem ref_add(Elem a, Elem b) const noexcept;
    Elem ref_neg(Elem a) const noexcept;
    Elem ref_mul(Elem a, Elem b) const noexcept;
    Elem ref_pow(Elem a, std::uint64_t e) const noexcept;

    /// Smallest packed element generating the multiplicative group.
    Elem generator() const noexcept { return generator_; }

    std::string describe() const;

private:
    FieldCtx(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);
    void build_tables();
    Elem find_generator() const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t modulus_bits_ = 0;  // characteristic 2 only
    Elem generator_ = 1;
    Elem nonresidue_ = 0;  // odd characteristic only

    std::vector<Elem> exp_;   // g^i, i in [0, q-1)
    std::vector<Elem> log_;   // log_g(a), a in [1, q)
    std::vector<Elem> zech_;  // log_g(1 + g^i) or kNoLog
    static constexpr Elem kNoLog = ~Elem{0};
};

/// Field element bound to its field. The field must outlive the element.
class Fe {
public:
    Fe(const FieldCtx& field, Elem value);
    Fe(const Field& field, Elem value) : Fe(*field, value) {}

    const FieldCtx& field() const noexcept { return *field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint64_t> coeffs() const { return field_->digits(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    Fe inv() const { return {*field_, field_->inv(value_)}; }
    Fe pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }
    std::optional<Fe> sqrt() const;

    Fe operator-() const { return {*field_, field_->neg(value_)}; }
    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator-(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    friend Fe operator/(const Fe& a, const Fe& b);
    friend bool operator==(const Fe& a, const Fe& b) noexcept {
        return a.value_ == b.value_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
    }

private:
    const FieldCtx* field_;
    Elem value_;
};

/// Throws Errc::context_mismatch unless both fields are the same.
void require_same_field(const FieldCtx& a, const FieldCtx& b);

bool is_prime(std::uint64_t n) noexcept;
/// Rabin's irreducibility test over GF(p). Coefficients constant term first.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> poly);
/// Lexicographically least (packed order of the lower coefficients) monic
/// irreducible of degree m over GF(p); requires p^m <= 2^20 unless m == 1.
std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned m);

/// All q elements in packed order.
std::vector<Elem> enumerate_field(const FieldCtx& field);
/// The p^s elements fixed by x -> x^(p^s); requires s | m.
std::vector<Elem> subfield_elements(const FieldCtx& field, unsigned s);

/// Field homomorphism GF(p^a) -> GF(p^b) for a | b, sending the small
/// field's x to the smallest packed root of its modulus inside the big one.
class Embedding {
public:
    Embedding(Field small, Field big);

    Elem operator()(Elem a) const;
    const Field& source() const noexcept { return small_; }
    const Field& target() const noexcept { return big_; }
    Elem image_of_generator() const noexcept { return root_; }

private:
    Field small_;
    Field big_;
    Elem root_ = 0;
};

}  // namespace tgrs::gf
