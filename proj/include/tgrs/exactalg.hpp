/**************************************************************************
 * exactalg.hpp
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

#include <cstddef>
#include <span>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs::alg {

using gf::Elem;
using gf::Field;

/// Dense row-major matrix over one finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(Field field, std::size_t n);
    /// Rows given as packed values; all rows must share one length.
    static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    gf::Fe entry(std::size_t r, std::size_t c) const { return {*field_, (*this)(r, c)}; }

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& entries() const noexcept { return data_; }

    bool is_zero() const noexcept;
    /// Copy keeping only the listed columns, in the given order.
    Matrix select_columns(std::span<const std::size_t> cols) const;
    void append_row(std::span<const Elem> values);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination: leftmost column first, topmost nonzero row as
/// pivot. The output is the unique reduced row echelon form.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x^T = 0}, one row per free column in increasing order.
Matrix nullspace(const Matrix& m);
bool row_space_equal(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// a * b^T without materializing the transpose.
Matrix mul_transpose(const Matrix& a, const Matrix& b);

/// Univariate polynomial, coefficients constant term first, no trailing
/// zeros. The zero polynomial is stored as the single coefficient 0.
class Poly {
public:
    explicit Poly(Field field);
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly monomial(Field field, Elem coeff, std::size_t degree);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    Elem eval(Elem x) const noexcept;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

private:
    void normalize();

    Field field_;
    std::vector<Elem> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision poly_divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) is 0.
Poly poly_gcd(const Poly& a, const Poly& b);
/// prod (x - r); throws Errc::duplicate_roots when roots repeat.
Poly poly_from_roots(const Field& field, std::span<const Elem> roots);
Poly poly_derivative(const Poly& f);

enum class RootPolicy {
    any,              // report whatever roots lie in the field
    require_simple,   // fail when gcd(f, f') is not constant
};

/// Roots of f in its field, by scanning every element in packed order.
std::vector<Elem> distinct_roots_in_field(const Poly& f, RootPolicy policy = RootPolicy::any);

}  // namespace tgrs::alg
