/**************************************************************************
 * exactalg.cpp
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

#include "tgrs/exactalg.hpp"

#include <algorithm>
#include <utility>

#include "tgrs/error.hpp"
#include "tgrs/kernels.hpp"

namespace tgrs::alg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(Errc::dimension_mismatch, "entry count does not match rows * cols");
    }
    for (Elem e : data_) {
        if (!field_->contains(e)) throw Error(Errc::invalid_argument, "entry outside the field");
    }
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(Errc::dimension_mismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] >= cols_) throw Error(Errc::dimension_mismatch, "column index out of range");
            out(r, c) = (*this)(r, cols[c]);
        }
    }
    return out;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(Errc::dimension_mismatch, "row length differs");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
    const auto& f = *m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t piv = row;
        while (piv < r.rows() && r(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != row) {
            auto a = r.row(piv);
            auto b = r.row(row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Elem scale = f.inv(r(row, col));
        for (auto& e : r.row(row)) e = f.mul(e, scale);
        const auto prow = r.row(row);
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other == row) continue;
            const Elem factor = r(other, col);
            if (factor == 0) continue;
            const Elem nf = f.neg(factor);
            auto orow = r.row(other);
            for (std::size_t c = col; c < r.cols(); ++c) {
                if (prow[c] != 0) orow[c] = f.add(orow[c], f.mul(nf, prow[c]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    const auto& f = *m.field();
    const auto red = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t p : red.pivots) is_pivot[p] = 1;
    Matrix out(m.field(), 0, m.cols());
    std::vector<Elem> vec(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(vec.begin(), vec.end(), 0);
        vec[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) vec[red.pivots[i]] = f.neg(red.reduced(i, free));
        out.append_row(vec);
    }
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    gf::require_same_field(*a.field(), *b.field());
    if (a.cols() != b.cols()) throw Error(Errc::dimension_mismatch, "column counts differ");
    const auto ra = rref(a);
    const auto rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (std::size_t i = 0; i < ra.rank; ++i) {
        if (!std::ranges::equal(ra.reduced.row(i), rb.reduced.row(i))) return false;
    }
    return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return kernels::mat_mul_parallel(a, b); }

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    }
    return out;
}

Matrix mul_transpose(const Matrix& a, const Matrix& b) {
    gf::require_same_field(*a.field(), *b.field());
    if (a.cols() != b.cols()) throw Error(Errc::dimension_mismatch, "column counts differ");
    const auto& f = *a.field();
    Matrix out(a.field(), a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ar = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto br = b.row(j);
            Elem acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l) acc = f.add(acc, f.mul(ar[l], br[l]));
            out(i, j) = acc;
        }
    }
    return out;
}

// Polynomials ---------------------------------------------------------------

Poly::Poly(Field field) : field_(std::move(field)), coeffs_{0} {}

Poly::Poly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem e : coeffs_) {
        if (!field_->contains(e)) throw Error(Errc::invalid_argument, "coefficient outside the field");
    }
    normalize();
}

Poly Poly::monomial(Field field, Elem coeff, std::size_t degree) {
    std::vector<Elem> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(std::move(field), std::move(c));
}

void Poly::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0);
}

int Poly::degree() const noexcept {
    return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1;
}

Elem Poly::eval(Elem x) const noexcept {
    const auto& f = *field_;
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    gf::require_same_field(*a.field_, *b.field_);
    const auto& f = *a.field_;
    std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    gf::require_same_field(*a.field_, *b.field_);
    const auto& f = *a.field_;
    std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    gf::require_same_field(*a.field_, *b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const auto& f = *a.field_;
    std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
}

PolyDivision poly_divmod(const Poly& a, const Poly& b) {
    gf::require_same_field(*a.field(), *b.field());
    if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
    const auto& f = *a.field();
    const int db = b.degree();
    std::vector<Elem> rem = a.coeffs();
    if (a.degree() < db) return {Poly(a.field()), a};
    std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Elem lead_inv = f.inv(b.coeffs().back());
    for (int d = a.degree(); d >= db; --d) {
        const Elem top = rem[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        const Elem factor = f.mul(top, lead_inv);
        const auto shift = static_cast<std::size_t>(d - db);
        quo[shift] = factor;
        for (int i = 0; i <= db; ++i) {
            const auto idx = shift + static_cast<std::size_t>(i);
            rem[idx] = f.sub(rem[idx], f.mul(factor, b.coeff(static_cast<std::size_t>(i))));
        }
    }
    return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    const auto& f = *x.field();
    const Elem s = f.inv(x.coeffs().back());
    std::vector<Elem> c = x.coeffs();
    for (auto& e : c) e = f.mul(e, s);
    return Poly(x.field(), std::move(c));
}

Poly poly_from_roots(const Field& field, std::span<const Elem> roots) {
    std::vector<Elem> sorted(roots.begin(), roots.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::duplicate_roots, "roots are not pairwise distinct");
    }
    const auto& f = *field;
    // c holds the running product, constant term first
    std::vector<Elem> c{1};
    for (Elem r : roots) {
        if (!f.contains(r)) throw Error(Errc::invalid_argument, "root outside the field");
        const Elem nr = f.neg(r);
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(nr, c[i]));
        c[0] = f.mul(nr, c[0]);
    }
    return Poly(field, std::move(c));
}

Poly poly_derivative(const Poly& p) {
    const auto& f = *p.field();
    const auto& c = p.coeffs();
    if (c.size() <= 1) return Poly(p.field());
    std::vector<Elem> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        d[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.p())), c[i]);
    }
    return Poly(p.field(), std::move(d));
}

std::vector<Elem> distinct_roots_in_field(const Poly& p, RootPolicy policy) {
    if (p.is_zero()) throw Error(Errc::invalid_argument, "zero polynomial has every element as a root");
    const auto& f = *p.field();
    if (f.order() > gf::kEnumerationCap) {
        throw Error(Errc::field_too_large, "field too large to scan for roots");
    }
    if (policy == RootPolicy::require_simple && poly_gcd(p, poly_derivative(p)).degree() > 0) {
        throw Error(Errc::repeated_root, "polynomial has a repeated factor");
    }
    std::vector<Elem> roots;
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        if (p.eval(static_cast<Elem>(x)) == 0) roots.push_back(static_cast<Elem>(x));
    }
    return roots;
}

}  // namespace tgrs::alg
