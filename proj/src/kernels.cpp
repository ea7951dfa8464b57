/**************************************************************************
 * kernels.cpp
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

#include "tgrs/kernels.hpp"

#include <algorithm>
#include <limits>

#include "tgrs/error.hpp"

namespace tgrs::kernels {

namespace {

using alg::Matrix;
using u64 = std::uint64_t;

constexpr u64 kSaturated = std::numeric_limits<u64>::max();

void check_product_shape(const Matrix& a, const Matrix& b) {
    gf::require_same_field(*a.field(), *b.field());
    if (a.cols() != b.rows()) {
        throw Error(Errc::dimension_mismatch, "inner dimensions differ");
    }
}

/// Messages with leading entry at `lead` number q^(k-1-lead).
std::vector<u64> messages_per_lead(u64 q, std::size_t k) {
    std::vector<u64> out(k);
    u64 count = 1;
    for (std::size_t i = k; i-- > 0;) {
        out[i] = count;
        count = count > kSaturated / q ? kSaturated : count * q;
    }
    return out;
}

// Walks a contiguous range of projective messages in index order. Index
// order: leading position ascending, then the trailing entries as a base-q
// number with the last coordinate least significant.
class MessageWalker {
public:
    MessageWalker(const Matrix& g, const std::vector<u64>& per_lead, u64 start)
        : g_(g), f_(*g.field()), k_(g.rows()), n_(g.cols()), digits_(k_, 0),
          partial_(k_ * n_, 0) {
        std::size_t lead = 0;
        while (start >= per_lead[lead]) {
            start -= per_lead[lead];
            ++lead;
        }
        lead_ = lead;
        for (std::size_t pos = k_; pos-- > lead_ + 1;) {
            digits_[pos] = static_cast<Elem>(start % f_.order());
            start /= f_.order();
        }
        rebuild_from(lead_);
    }

    std::size_t weight() const {
        const Elem* cw = &partial_[(k_ - 1) * n_];
        std::size_t w = 0;
        for (std::size_t j = 0; j < n_; ++j) w += cw[j] != 0;
        return w;
    }

    void advance() {
        const Elem top = static_cast<Elem>(f_.order() - 1);
        std::size_t pos = k_;
        while (pos-- > lead_ + 1) {
            if (digits_[pos] != top) {
                ++digits_[pos];
                rebuild_from(pos);
                return;
            }
            digits_[pos] = 0;
        }
        ++lead_;
        if (lead_ < k_) rebuild_from(lead_);
    }

private:
    void rebuild_from(std::size_t pos) {
        for (std::size_t r = pos; r < k_; ++r) {
            Elem* out = &partial_[r * n_];
            const auto grow = g_.row(r);
            if (r == lead_) {
                std::copy(grow.begin(), grow.end(), out);
                continue;
            }
            const Elem* prev = r > lead_ ? &partial_[(r - 1) * n_] : nullptr;
            const Elem c = r < lead_ ? 0 : digits_[r];
            for (std::size_t j = 0; j < n_; ++j) {
                const Elem base = prev ? prev[j] : 0;
                out[j] = c == 0 ? base : f_.add(base, f_.mul(c, grow[j]));
            }
        }
    }

    const Matrix& g_;
    const gf::FieldCtx& f_;
    std::size_t k_;
    std::size_t n_;
    std::size_t lead_ = 0;
    std::vector<Elem> digits_;
    std::vector<Elem> partial_;
};

void check_generator(const Matrix& g) {
    if (g.rows() == 0) throw Error(Errc::invalid_argument, "generator has no rows");
}

}  // namespace

Matrix mat_mul_serial(const Matrix& a, const Matrix& b) {
    check_product_shape(a, b);
    const auto& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Elem acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l) acc = f.add(acc, f.mul(a(i, l), b(l, j)));
            out(i, j) = acc;
        }
    }
    return out;
}

Matrix mat_mul_parallel(const Matrix& a, const Matrix& b) {
    check_product_shape(a, b);
    const auto& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * b.cols() * a.cols() > 32768)
    for (std::int64_t i = 0; i < rows; ++i) {
        auto orow = out.row(static_cast<std::size_t>(i));
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem c = a(static_cast<std::size_t>(i), l);
            if (c == 0) continue;
            const auto brow = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                orow[j] = f.add(orow[j], f.mul(c, brow[j]));
            }
        }
    }
    return out;
}

std::uint64_t projective_count(std::uint64_t q, std::size_t k) noexcept {
    u64 total = 0;
    u64 term = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kSaturated - term) return kSaturated;
        total += term;
        term = term > kSaturated / q ? kSaturated : term * q;
    }
    return total;
}

std::size_t min_weight_serial(const Matrix& g) {
    check_generator(g);
    const auto& f = *g.field();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    const u64 q = f.order();
    std::size_t best = n + 1;
    std::vector<Elem> msg(k);
    std::vector<Elem> cw(n);
    for (std::size_t lead = 0; lead < k; ++lead) {
        const u64 tail = messages_per_lead(q, k)[lead];
        for (u64 idx = 0; idx < tail; ++idx) {
            std::fill(msg.begin(), msg.end(), 0);
            msg[lead] = 1;
            u64 x = idx;
            for (std::size_t pos = k; pos-- > lead + 1;) {
                msg[pos] = static_cast<Elem>(x % q);
                x /= q;
            }
            std::size_t w = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = 0;
                for (std::size_t r = lead; r < k; ++r) acc = f.add(acc, f.mul(msg[r], g(r, j)));
                w += acc != 0;
            }
            best = std::min(best, w);
        }
    }
    return best;
}

std::size_t min_weight_parallel(const Matrix& g) {
    check_generator(g);
    const u64 q = g.field()->order();
    const std::size_t k = g.rows();
    const auto per_lead = messages_per_lead(q, k);
    const u64 total = projective_count(q, k);
    constexpr u64 kBlock = 4096;
    const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
    std::size_t best = g.cols() + 1;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const u64 start = static_cast<u64>(b) * kBlock;
        const u64 stop = std::min(total, start + kBlock);
        MessageWalker walk(g, per_lead, start);
        for (u64 idx = start; idx < stop; ++idx) {
            best = std::min(best, walk.weight());
            if (idx + 1 < stop) walk.advance();
        }
    }
    return best;
}

std::optional<std::size_t> min_dependent_columns(const Matrix& h, std::uint64_t max_subsets) {
    const std::size_t n = h.cols();
    const std::size_t rank_h = alg::rank(h);
    u64 examined = 0;
    for (std::size_t w = 1; w <= n; ++w) {
        // any rank_h + 1 columns are dependent
        if (w > rank_h) return w;
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            if (++examined > max_subsets) return std::nullopt;
            if (alg::rank(h.select_columns(idx)) < w) return w;
            std::size_t i = w;
            while (i-- > 0 && idx[i] == n - w + i) {}
            if (i == static_cast<std::size_t>(-1)) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n + 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept {
    if (r > n) return 0;
    r = std::min(r, n - r);
    u64 out = 1;
    for (u64 i = 1; i <= r; ++i) {
        const u64 num = n - r + i;
        // out * num / i is exact at every step; guard the product
        if (out > kSaturated / num) return kSaturated;
        out = out * num / i;
    }
    return out;
}

namespace {

SubsetSums sums_of(const gf::FieldCtx& f, std::span<const Elem> points,
                   std::span<const std::size_t> idx) {
    SubsetSums s{0, 0, 0};
    for (std::size_t i : idx) {
        const Elem x = points[i];
        s.e3 = f.add(s.e3, f.mul(s.e2, x));
        s.e2 = f.add(s.e2, f.mul(s.e1, x));
        s.e1 = f.add(s.e1, x);
    }
    return s;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    std::size_t i = r;
    while (i-- > 0 && idx[i] == n - r + i) {}
    if (i == static_cast<std::size_t>(-1)) return false;
    ++idx[i];
    for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

/// The combination of lexicographic rank `rank` among r-subsets of [0, n).
std::vector<std::size_t> unrank_combination(u64 rank, std::size_t n, std::size_t r) {
    std::vector<std::size_t> idx;
    idx.reserve(r);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < r; ++slot) {
        while (true) {
            const u64 with = binomial(n - next - 1, r - slot - 1);
            if (rank < with) break;
            rank -= with;
            ++next;
        }
        idx.push_back(next++);
    }
    return idx;
}

}  // namespace

std::vector<char> collect_subset_values_serial(const gf::FieldCtx& field,
                                               std::span<const Elem> points, std::size_t r,
                                               const SubsetValue& value) {
    std::vector<char> hits(field.order(), 0);
    if (r > points.size()) return hits;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    do {
        if (auto v = value(sums_of(field, points, idx))) hits[*v] = 1;
    } while (next_combination(idx, points.size()));
    return hits;
}

std::vector<char> collect_subset_values_parallel(const gf::FieldCtx& field,
                                                 std::span<const Elem> points, std::size_t r,
                                                 const SubsetValue& value) {
    std::vector<char> hits(field.order(), 0);
    if (r > points.size()) return hits;
    const u64 total = binomial(points.size(), r);
    constexpr u64 kBlock = 1024;
    const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
#pragma omp parallel
    {
        std::vector<char> local(field.order(), 0);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const u64 start = static_cast<u64>(b) * kBlock;
            const u64 stop = std::min(total, start + kBlock);
            auto idx = unrank_combination(start, points.size(), r);
            for (u64 i = start; i < stop; ++i) {
                if (auto v = value(sums_of(field, points, idx))) local[*v] = 1;
                next_combination(idx, points.size());
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i < local.size(); ++i) hits[i] |= local[i];
    }
    return hits;
}

}  // namespace tgrs::kernels
