//Copyright (c) 2026, The z4lat authors
//
//Licensed under the Apache License, Version 2.0 (the "License");
//you may not use this file except in compliance with the License.
//You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//Unless required by applicable law or agreed to in writing, software
//distributed under the License is distributed on an "AS IS" BASIS,
//WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//See the License for the specific language governing permissions and
//limitations under the License.

#ifndef Z4LAT_Z4_HPP
#define Z4LAT_Z4_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "common.hpp"

namespace z4lat {

using Z4Vector = std::vector<std::uint8_t>;

inline std::uint8_t z4(long long x) { return static_cast<std::uint8_t>(((x % 4) + 4) % 4); }

class Z4Matrix {
public:
    Z4Matrix() = default;
    Z4Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static Z4Matrix from_rows(const std::vector<std::vector<int>>& rows, int cols = -1) {
        if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        Z4Matrix m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows_; ++i) {
            require(static_cast<int>(rows[i].size()) == cols, "ragged generator matrix");
            for (int j = 0; j < cols; ++j) m(i, j) = z4(rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint8_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    std::uint8_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Z4Vector row(int i) const {
        return Z4Vector(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
    }
    std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
        return out;
    }
    Z4Matrix transpose() const {
        Z4Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    friend Z4Matrix operator*(const Z4Matrix& x, const Z4Matrix& y) {
        require(x.cols_ == y.rows_, "matrix shape mismatch");
        Z4Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < y.cols_; ++j) {
                int s = 0;
                for (int k = 0; k < x.cols_; ++k) s += x(i, k) * y(k, j);
                r(i, j) = static_cast<std::uint8_t>(s & 3);
            }
        return r;
    }
    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::uint8_t v) { return v == 0; });
    }
    bool operator==(const Z4Matrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> a_;
};

struct WeightTriple {
    int hamming = 0;
    int lee = 0;
    int euclidean = 0;
    bool operator==(const WeightTriple&) const = default;
};

inline WeightTriple weights(const Z4Vector& x) {
    WeightTriple w;
    for (auto v : x) {
        require(v < 4, "entry outside Z4");
        int m = std::min<int>(v, 4 - v);
        w.hamming += v != 0;
        w.lee += m;
        w.euclidean += m * m;
    }
    return w;
}

inline int inner_product(const Z4Vector& x, const Z4Vector& y) {
    int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s & 3;
}

// A Z4-linear code held in standard form
//   ( I_k1  A    B  )
//   ( 0     2I   2C )
// with perm[p] = input column sitting at standard position p.
class Z4Code {
public:
    Z4Code() = default;

    int n() const { return n_; }
    int k1() const { return k1_; }
    int k2() const { return k2_; }
    const Z4Matrix& generator() const { return g_; }
    const std::vector<int>& column_permutation() const { return perm_; }

    int log2_size() const { return 2 * k1_ + k2_; }
    BigInt size() const { return pow2(static_cast<unsigned>(log2_size())); }

    // generator rows with the permutation undone
    Z4Matrix generator_input_order() const {
        Z4Matrix m(g_.rows(), n_);
        for (int i = 0; i < g_.rows(); ++i)
            for (int p = 0; p < n_; ++p) m(i, perm_[p]) = g_(i, p);
        return m;
    }

    Z4Vector to_input_order(const Z4Vector& y) const {
        Z4Vector x(n_);
        for (int p = 0; p < n_; ++p) x[perm_[p]] = y[p];
        return x;
    }

    friend Z4Code standard_form(const Z4Matrix& m);

private:
    int n_ = 0, k1_ = 0, k2_ = 0;
    Z4Matrix g_;
    std::vector<int> perm_;
};

inline bool is_unit(std::uint8_t v) { return v & 1; }

inline Z4Code standard_form(const Z4Matrix& m) {
    const int n = m.cols();
    std::vector<std::vector<std::uint8_t>> a(m.rows(), std::vector<std::uint8_t>(n));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int rows = static_cast<int>(a.size());

    auto swap_cols = [&](int x, int y) {
        if (x == y) return;
        for (auto& row : a) std::swap(row[x], row[y]);
        std::swap(perm[x], perm[y]);
    };
    auto axpy = [&](int dst, int src, int mult) {  // row_dst += mult * row_src
        for (int j = 0; j < n; ++j) a[dst][j] = static_cast<std::uint8_t>((a[dst][j] + mult * a[src][j]) & 3);
    };

    // unit pivots; eliminations can create units in columns skipped earlier, so rescan every time
    int r = 0;
    for (;;) {
        int pc = -1, pr = -1;
        for (int j = r; j < n && pc < 0; ++j)
            for (int i = r; i < rows; ++i)
                if (is_unit(a[i][j])) {
                    pc = j;
                    pr = i;
                    break;
                }
        if (pc < 0) break;
        std::swap(a[pr], a[r]);
        swap_cols(pc, r);
        if (a[r][r] == 3)
            for (auto& v : a[r]) v = static_cast<std::uint8_t>((3 * v) & 3);
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][r]) axpy(i, r, 4 - a[i][r]);
        ++r;
    }
    const int k1 = r;

    // remaining rows live in 2*Z4: reduce them as binary rows
    int q = k1;
    for (;;) {
        int pc = -1, pr = -1;
        for (int j = q; j < n && pc < 0; ++j)
            for (int i = q; i < rows; ++i)
                if (a[i][j] == 2) {
                    pc = j;
                    pr = i;
                    break;
                }
        if (pc < 0) break;
        std::swap(a[pr], a[q]);
        swap_cols(pc, q);
        for (int i = k1; i < rows; ++i)
            if (i != q && a[i][q] == 2) axpy(i, q, 1);
        ++q;
    }
    const int k2 = q - k1;
    // bring the A block into {0,1}
    for (int p = k1; p < k1 + k2; ++p)
        for (int t = 0; t < k1; ++t)
            if (a[t][p] >= 2) axpy(t, p, 1);

    Z4Code c;
    c.n_ = n;
    c.k1_ = k1;
    c.k2_ = k2;
    c.perm_ = perm;
    c.g_ = Z4Matrix(k1 + k2, n);
    for (int i = 0; i < k1 + k2; ++i)
        for (int j = 0; j < n; ++j) c.g_(i, j) = a[i][j];
    return c;
}

// true when g has the block shape produced by standard_form
inline bool is_standard_form(const Z4Matrix& g, int k1, int k2) {
    if (g.rows() != k1 + k2 || g.cols() < k1 + k2) return false;
    for (int i = 0; i < k1; ++i) {
        for (int j = 0; j < k1; ++j)
            if (g(i, j) != (i == j ? 1 : 0)) return false;
        for (int j = k1; j < k1 + k2; ++j)
            if (g(i, j) > 1) return false;
    }
    for (int i = k1; i < k1 + k2; ++i)
        for (int j = 0; j < g.cols(); ++j) {
            if (g(i, j) & 1) return false;
            if (j < k1 && g(i, j)) return false;
            if (j >= k1 && j < k1 + k2 && g(i, j) != (i == j ? 2 : 0)) return false;
        }
    return true;
}

// Dual code from the standard-form generator, returned in the same input coordinates.
inline Z4Code dual_generator(const Z4Code& c) {
    const Z4Matrix& g = c.generator();
    const int n = c.n(), k1 = c.k1(), k2 = c.k2(), k3 = n - k1 - k2;
    require(is_standard_form(g, k1, k2), "dual_generator needs a standard-form generator");
    auto A = [&](int i, int j) { return static_cast<int>(g(i, k1 + j)); };
    auto B = [&](int i, int j) { return static_cast<int>(g(i, k1 + k2 + j)); };
    auto C = [&](int i, int j) { return static_cast<int>(g(k1 + i, k1 + k2 + j) / 2); };

    Z4Matrix d(k3 + k2, n);
    for (int i = 0; i < k3; ++i) {
        for (int j = 0; j < k1; ++j) {
            int s = -B(j, i);
            for (int l = 0; l < k2; ++l) s -= C(l, i) * A(j, l);
            d(i, j) = z4(s);
        }
        for (int l = 0; l < k2; ++l) d(i, k1 + l) = z4(C(l, i));
        d(i, k1 + k2 + i) = 1;
    }
    for (int l = 0; l < k2; ++l) {
        for (int j = 0; j < k1; ++j) d(k3 + l, j) = z4(2 * A(j, l));
        d(k3 + l, k1 + l) = 2;
    }
    Z4Matrix in(d.rows(), n);
    const auto& perm = c.column_permutation();
    for (int i = 0; i < d.rows(); ++i)
        for (int p = 0; p < n; ++p) in(i, perm[p]) = d(i, p);
    return standard_form(in);
}

inline void check_budget(const Z4Code& c, const EnumerationBudget& b) {
    if (c.log2_size() > b.log2_max)
        throw BudgetExceeded("enumeration needs 2^" + std::to_string(c.log2_size()) + " codewords, budget is 2^" +
                                 std::to_string(b.log2_max),
                             c.size());
}

// Restartable codeword stream over message indices [begin, end) in mixed-radix
// lexicographic order (Z4 digits first, most significant first, then Z2 digits).
// Codewords come out in input coordinates.
class CodewordStream {
public:
    CodewordStream(const Z4Code& c, std::uint64_t begin, std::uint64_t end) : c_(&c), idx_(begin), end_(end) {
        require(c.log2_size() < 64, "codeword index does not fit 64 bits");
        end_ = std::min<std::uint64_t>(end_, std::uint64_t{1} << c.log2_size());
    }
    explicit CodewordStream(const Z4Code& c, const EnumerationBudget& b = {})
        : CodewordStream((check_budget(c, b), c), 0, ~std::uint64_t{0}) {}

    bool next(Z4Vector& out) {
        if (idx_ >= end_) return false;
        out = c_->to_input_order(codeword_at(*c_, idx_));
        ++idx_;
        return true;
    }

    static Z4Vector codeword_at(const Z4Code& c, std::uint64_t idx) {
        const int k1 = c.k1(), k2 = c.k2(), n = c.n();
        std::vector<int> coef(k1 + k2);
        for (int i = k1 + k2 - 1; i >= k1; --i) {
            coef[i] = static_cast<int>(idx & 1);
            idx >>= 1;
        }
        for (int i = k1 - 1; i >= 0; --i) {
            coef[i] = static_cast<int>(idx & 3);
            idx >>= 2;
        }
        Z4Vector y(n, 0);
        const auto& g = c.generator();
        for (int i = 0; i < k1 + k2; ++i)
            if (coef[i])
                for (int j = 0; j < n; ++j) y[j] = static_cast<std::uint8_t>((y[j] + coef[i] * g(i, j)) & 3);
        return y;
    }

private:
    const Z4Code* c_;
    std::uint64_t idx_, end_;
};

// Bit-sliced Z4 vector for n <= 64: bit j of lo/hi are the low/high bits of entry j.
struct PackedZ4 {
    std::uint64_t lo = 0, hi = 0;

    static PackedZ4 pack(const Z4Vector& v) {
        PackedZ4 p;
        for (size_t j = 0; j < v.size(); ++j) {
            p.lo |= std::uint64_t(v[j] & 1) << j;
            p.hi |= std::uint64_t((v[j] >> 1) & 1) << j;
        }
        return p;
    }
    Z4Vector unpack(int n) const {
        Z4Vector v(n);
        for (int j = 0; j < n; ++j) v[j] = static_cast<std::uint8_t>(((lo >> j) & 1) | (((hi >> j) & 1) << 1));
        return v;
    }
    friend PackedZ4 operator+(PackedZ4 a, PackedZ4 b) { return {a.lo ^ b.lo, a.hi ^ b.hi ^ (a.lo & b.lo)}; }
    PackedZ4 operator-() const { return {lo, hi ^ lo}; }
    int n13() const { return std::popcount(lo); }
    int n2() const { return std::popcount(hi & ~lo); }
};

// Counts codewords by (n1+n3, n2). Entry [j*(n+1)+k].
struct SweCensus {
    int n = 0;
    std::vector<std::uint64_t> count;
    std::uint64_t at(int j, int k) const { return count[static_cast<size_t>(j) * (n + 1) + k]; }
};

namespace detail {

inline void census_packed_range(const std::vector<PackedZ4>& steps, const std::vector<PackedZ4>& negs,
                                const std::vector<bool>& order4, std::uint64_t begin, std::uint64_t end, int n,
                                std::vector<std::uint64_t>& cnt) {
    if (begin >= end) return;
    auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };
    PackedZ4 x;
    std::uint64_t g0 = gray(begin);
    for (size_t b = 0; b < steps.size(); ++b)
        if ((g0 >> b) & 1) x = x + steps[b];
    const size_t w = static_cast<size_t>(n) + 1;
    ++cnt[static_cast<size_t>(x.n13()) * w + x.n2()];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        int b = std::countr_zero(i);
        bool now_set = (gray(i) >> b) & 1;
        x = x + ((now_set || !order4[b]) ? steps[b] : negs[b]);
        ++cnt[static_cast<size_t>(x.n13()) * w + x.n2()];
    }
}

}  // namespace detail

inline SweCensus swe_census(const Z4Code& c, int threads = 1, const EnumerationBudget& budget = {}) {
    check_budget(c, budget);
    const int n = c.n();
    SweCensus out;
    out.n = n;
    const size_t w = static_cast<size_t>(n) + 1;
    out.count.assign(w * w, 0);
    const std::uint64_t total = std::uint64_t{1} << c.log2_size();

    if (n <= 64) {
        std::vector<PackedZ4> steps, negs;
        std::vector<bool> order4;
        const auto& g = c.generator();
        for (int i = 0; i < c.k1() + c.k2(); ++i) {
            PackedZ4 r = PackedZ4::pack(g.row(i));
            steps.push_back(r);
            negs.push_back(-r);
            order4.push_back(i < c.k1());
            if (i < c.k1()) {
                steps.push_back(r + r);
                negs.push_back(r + r);
                order4.push_back(false);
            }
        }
        threads = std::max(1, threads);
        if (threads == 1 || total < 4096) {
            detail::census_packed_range(steps, negs, order4, 0, total, n, out.count);
            return out;
        }
        std::vector<std::vector<std::uint64_t>> parts(threads, std::vector<std::uint64_t>(w * w, 0));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t b = total / threads * t, e = t + 1 == threads ? total : total / threads * (t + 1);
            pool.emplace_back([&, b, e, t] { detail::census_packed_range(steps, negs, order4, b, e, n, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts)
            for (size_t i = 0; i < p.size(); ++i) out.count[i] += p[i];
        return out;
    }

    CodewordStream s(c, 0, total);
    Z4Vector y;
    while (s.next(y)) {
        int j = 0, k = 0;
        for (auto v : y) {
            j += v & 1;
            k += v == 2;
        }
        ++out.count[static_cast<size_t>(j) * w + k];
    }
    return out;
}

}  // namespace z4lat

#endif
