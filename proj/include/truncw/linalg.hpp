/*
   Copyright 2026 The truncw authors

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

#ifndef TRUNCW_LINALG_HPP
#define TRUNCW_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "truncw/matrix.hpp"
#include "truncw/rational.hpp"

namespace truncw {

/// Exact Gaussian elimination utilities over Rat.

inline std::size_t rank(Matrix<Rat> a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        Rat pv = a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= pv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

inline Matrix<Rat> invert(const Matrix<Rat>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("invert: not square");
    Matrix<Rat> a = m;
    Matrix<Rat> inv = Matrix<Rat>::identity(n, Rat(1), Rat(0));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(a(piv, c))) ++piv;
        if (piv == n) throw std::domain_error("invert: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rat pv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= pv;
            inv(c, j) /= pv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Sparse exact linear system with rows addressed by an ordered key type.
/// Collects coefficient rows, then solves A x = b in reduced row echelon
/// form. Unconstrained unknowns are set to zero; returns nullopt when
/// inconsistent. Deterministic for fixed insertion content.
template <class Key>
class LinearSystem {
  public:
    explicit LinearSystem(std::size_t num_unknowns) : n_(num_unknowns) {}

    void add(const Key& row, std::size_t unknown, const Rat& coeff) {
        if (is_zero(coeff)) return;
        auto& r = rows_[row];
        r.lhs[unknown] += coeff;
        if (is_zero(r.lhs[unknown])) r.lhs.erase(unknown);
    }
    void add_rhs(const Key& row, const Rat& value) {
        if (is_zero(value)) return;
        auto& r = rows_[row];
        r.rhs += value;
    }

    std::optional<std::vector<Rat>> solve() const {
        std::vector<std::vector<Rat>> m;
        m.reserve(rows_.size());
        for (const auto& [key, row] : rows_) {
            std::vector<Rat> dense(n_ + 1, Rat(0));
            for (const auto& [u, c] : row.lhs) dense[u] = c;
            dense[n_] = row.rhs;
            m.push_back(std::move(dense));
        }
        std::size_t r = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < n_ && r < m.size(); ++c) {
            std::size_t piv = r;
            while (piv < m.size() && is_zero(m[piv][c])) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[piv], m[r]);
            Rat pv = m[r][c];
            for (auto& x : m[r]) x /= pv;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == r || is_zero(m[i][c])) continue;
                Rat f = m[i][c];
                for (std::size_t j = c; j <= n_; ++j) m[i][j] -= f * m[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < m.size(); ++i)
            if (!is_zero(m[i][n_])) return std::nullopt;
        std::vector<Rat> x(n_, Rat(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][n_];
        return x;
    }

  private:
    struct Row {
        std::map<std::size_t, Rat> lhs;
        Rat rhs = Rat(0);
    };
    std::size_t n_;
    std::map<Key, Row> rows_;
};

}  // namespace truncw

#endif
