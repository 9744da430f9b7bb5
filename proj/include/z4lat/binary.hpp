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

#ifndef Z4LAT_BINARY_HPP
#define Z4LAT_BINARY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace z4lat {

using F2Vector = std::vector<std::uint8_t>;

// Binary linear code kept as a reduced row echelon basis.
class BinaryCode {
public:
    BinaryCode() = default;

    // rows may be dependent; they get reduced
    BinaryCode(int n, const std::vector<F2Vector>& rows) : n_(n) {
        for (const auto& r : rows) {
            require(static_cast<int>(r.size()) == n, "binary row has wrong length");
            for (auto v : r) require(v <= 1, "binary entry outside {0,1}");
        }
        basis_ = echelon(rows, n, &pivots_);
    }

    static BinaryCode zero(int n) { return BinaryCode(n, {}); }
    static BinaryCode full(int n) {
        std::vector<F2Vector> rows(n, F2Vector(n, 0));
        for (int i = 0; i < n; ++i) rows[i][i] = 1;
        return BinaryCode(n, rows);
    }

    int n() const { return n_; }
    int k() const { return static_cast<int>(basis_.size()); }
    const std::vector<F2Vector>& generator() const { return basis_; }

    bool contains(const F2Vector& v) const {
        F2Vector r = v;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (r[pivots_[i]])
                for (int j = 0; j < n_; ++j) r[j] ^= basis_[i][j];
        return std::all_of(r.begin(), r.end(), [](std::uint8_t x) { return x == 0; });
    }

    bool contains(const BinaryCode& other) const {
        if (other.n_ != n_) return false;
        for (const auto& g : other.basis_)
            if (!contains(g)) return false;
        return true;
    }

    bool operator==(const BinaryCode& o) const { return n_ == o.n_ && basis_ == o.basis_; }

    BinaryCode dual() const {
        // from RREF: free columns give the parity-check basis
        std::vector<char> is_pivot(n_, 0);
        for (int p : pivots_) is_pivot[p] = 1;
        std::vector<F2Vector> rows;
        for (int f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            F2Vector h(n_, 0);
            h[f] = 1;
            for (size_t i = 0; i < basis_.size(); ++i) h[pivots_[i]] = basis_[i][f];
            rows.push_back(h);
        }
        return BinaryCode(n_, rows);
    }

    std::vector<std::uint64_t> packed_basis() const {
        require(n_ <= 64, "packed binary enumeration supports n <= 64");
        std::vector<std::uint64_t> out;
        for (const auto& r : basis_) {
            std::uint64_t w = 0;
            for (int j = 0; j < n_; ++j) w |= std::uint64_t(r[j]) << j;
            out.push_back(w);
        }
        return out;
    }

    // every codeword, packed, in binary-reflected Gray order
    std::vector<std::uint64_t> codewords(const EnumerationBudget& b = {}) const {
        if (k() > b.log2_max)
            throw BudgetExceeded("binary enumeration needs 2^" + std::to_string(k()) + " codewords", pow2(k()));
        auto g = packed_basis();
        std::vector<std::uint64_t> out;
        out.reserve(std::size_t{1} << k());
        std::uint64_t x = 0;
        out.push_back(x);
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << k()); ++i) {
            x ^= g[std::countr_zero(i)];
            out.push_back(x);
        }
        return out;
    }

private:
    static std::vector<F2Vector> echelon(std::vector<F2Vector> rows, int n, std::vector<int>* pivots) {
        int r = 0;
        pivots->clear();
        for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
            int p = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][c]) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(rows[p], rows[r]);
            for (int i = 0; i < static_cast<int>(rows.size()); ++i)
                if (i != r && rows[i][c])
                    for (int j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
            pivots->push_back(c);
            ++r;
        }
        rows.resize(r);
        return rows;
    }

    int n_ = 0;
    std::vector<F2Vector> basis_;
    std::vector<int> pivots_;
};

inline F2Vector hadamard(const F2Vector& x, const F2Vector& y) {
    F2Vector z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] & y[i];
    return z;
}

}  // namespace z4lat

#endif
