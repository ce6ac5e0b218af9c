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

#ifndef TRUNCW_GLNP_BASIS_HPP
#define TRUNCW_GLNP_BASIS_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "truncw/matrix.hpp"
#include "truncw/poly.hpp"
#include "truncw/rational.hpp"

namespace truncw {

/// The decomposition gl(Np) = gl(N) (x) gl(p) with the principal sl(2) in
/// sl(p). Holds the basis matrices M_{j,m} (p x p), the scalar products
/// eta_j, and the memoized Clebsch-Gordan-like coefficient tables.
///
/// Multiplet conventions: j = 0..p-1 (j = 0 included, the gl(p) identity
/// direction), -j <= m <= j. Tables are built lazily and are immutable once
/// built; build single-threaded per context.
class PContext {
  public:
    PContext(int N, int p) : N_(N), p_(p) {
        if (N < 1 || p < 1) throw std::invalid_argument("PContext: need N >= 1 and p >= 1");
    }

    int N() const { return N_; }
    int p() const { return p_; }

    /// Coefficient of E_{k,k+m} (m >= 0) or E_{k-m,k} (m <= 0) in M_{j,m}.
    /// Out-of-band k gives 0; out-of-range (j, m) throws.
    Rat a_coeff(int j, int m, int k) const {
        check_jm(j, m);
        if (m >= 0) {
            if (k < 1 || k > p_ - m) return Rat(0);
            Rat s(0);
            for (int i = 0; i <= j - m; ++i)
                s += Rat(parity_sign(i + j + m)) * binomial(j - m, i) * a_top(j, k - i);
            return s;
        }
        if (k < 1 || k > p_ + m) return Rat(0);
        Rat s(0);
        for (int i = 0; i <= j - m; ++i)
            s += Rat(parity_sign(i + j + m)) * binomial(j - m, i) * a_top(j, k - i - m);
        return s;
    }

    /// The p x p matrix M_{j,m} of the principal-sl(2) multiplet basis.
    const Matrix<Rat>& M(int j, int m) const {
        check_jm(j, m);
        auto key = std::make_pair(j, m);
        auto it = m_cache_.find(key);
        if (it != m_cache_.end()) return it->second;
        Matrix<Rat> A(static_cast<std::size_t>(p_), static_cast<std::size_t>(p_));
        if (m >= 0) {
            for (int k = 1; k <= p_ - m; ++k) A(k - 1, k + m - 1) = a_coeff(j, m, k);
        } else {
            for (int k = 1; k <= p_ + m; ++k) A(k - m - 1, k - 1) = a_coeff(j, m, k);
        }
        return m_cache_.emplace(key, std::move(A)).first->second;
    }

    // p = 1: the principal sl(2) degenerates to zero (no j = 1 multiplet).
    Matrix<Rat> e_plus() const { return p_ == 1 ? Matrix<Rat>(1, 1) : M(1, 1) * rat(1, 2); }
    Matrix<Rat> e_zero() const { return p_ == 1 ? Matrix<Rat>(1, 1) : M(1, 0) * rat(-1, 2); }
    Matrix<Rat> e_minus() const { return p_ == 1 ? Matrix<Rat>(1, 1) : M(1, -1) * rat(-1, 2); }

    /// eta_j = (2j)! (j!)^2 C(p+j, 2j+1); equals (-1)^m tr(M_{j,m} M_{j,-m}).
    Rat eta(int j) const {
        if (j < 0 || j >= p_) throw std::invalid_argument("eta: j out of range");
        return factorial(2 * j) * factorial(j) * factorial(j) * binomial(p_ + j, 2 * j + 1);
    }

    /// <j,m;l,n|r,s> = (-1)^s / eta_r * tr(M_{j,m} M_{l,n} M_{r,-s}).
    /// Zero outside the selection rules s = m+n, |j-l| <= r <= min(j+l, p-1);
    /// magnetic indices outside their band also give 0 (absent components),
    /// while a multiplet index outside 0..p-1 is an error.
    Rat cg(int j, int m, int l, int n, int r, int s) const {
        check_j(j);
        check_j(l);
        if (std::abs(m) > j || std::abs(n) > l) return Rat(0);
        if (r < 0 || r >= p_ || s < -r || s > r) return Rat(0);
        if (s != m + n) return Rat(0);
        if (r < std::abs(j - l) || r > j + l) return Rat(0);
        for (const auto& [rs, c] : cg_pairs(j, m, l, n))
            if (rs.first == r && rs.second == s) return c;
        return Rat(0);
    }

    /// Nonzero coefficients of the product decomposition
    ///   M_{j,m} M_{l,n} = sum_{r,s} <j,m;l,n|r,s> M_{r,s}.
    /// Memoized; the workhorse of every bracket computation downstream.
    const std::vector<std::pair<std::pair<int, int>, Rat>>& cg_pairs(int j, int m, int l, int n) const {
        auto key = std::make_tuple(j, m, l, n);
        auto it = cg_cache_.find(key);
        if (it != cg_cache_.end()) return it->second;
        std::vector<std::pair<std::pair<int, int>, Rat>> out;
        const int s = m + n;
        Matrix<Rat> prod = M(j, m) * M(l, n);
        for (int r = std::abs(j - l); r <= std::min(j + l, p_ - 1); ++r) {
            if (std::abs(s) > r) continue;
            Rat c = Rat(parity_sign(s)) * (prod * M(r, -s)).trace() / eta(r);
            if (!is_zero(c)) out.push_back({{r, s}, c});
        }
        return cg_cache_.emplace(key, std::move(out)).first->second;
    }

    /// Abstract gl(Np) commutator in the Upsilon basis:
    ///   [Y^{jm}_{ab}, Y^{ln}_{cd}] =
    ///     sum_{r,s} ( d_{bc} <j,m;l,n|r,s> Y^{rs}_{ad} - d_{ad} <l,n;j,m|r,s> Y^{rs}_{cb} ).
    /// Generators are returned in the J family.
    Poly glnp_commutator(int j, int m, int a, int b, int l, int n, int c, int d) const {
        check_ab(a, b);
        check_ab(c, d);
        Poly out;
        if (b == c)
            for (const auto& [rs, co] : cg_pairs(j, m, l, n))
                out += pgen(gen_J(rs.first, rs.second, a, d)) * co;
        if (a == d)
            for (const auto& [rs, co] : cg_pairs(l, n, j, m))
                out -= pgen(gen_J(rs.first, rs.second, c, b)) * co;
        return out;
    }

    /// Fundamental-representation matrix M^{jm}_{ab} = E_{ab} (x) M_{jm}, size Np x Np.
    Matrix<Rat> M_ab(int j, int m, int a, int b) const {
        check_ab(a, b);
        Matrix<Rat> E(static_cast<std::size_t>(N_), static_cast<std::size_t>(N_));
        E(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = Rat(1);
        return kron(E, M(j, m));
    }

  private:
    // a_{j,j}^k = (k+j-1)!(p-k)! / ((k-1)!(p-k-j)!), zero out of band.
    Rat a_top(int j, int k) const {
        if (k < 1 || k > p_ - j) return Rat(0);
        return factorial(k + j - 1) * factorial(p_ - k) / (factorial(k - 1) * factorial(p_ - k - j));
    }
    void check_j(int j) const {
        if (j < 0 || j >= p_)
            throw std::invalid_argument("multiplet index out of range: j=" + std::to_string(j) +
                                        " (p=" + std::to_string(p_) + ")");
    }
    void check_jm(int j, int m) const {
        check_j(j);
        if (m < -j || m > j)
            throw std::invalid_argument("multiplet index out of range: j=" + std::to_string(j) +
                                        " m=" + std::to_string(m) + " (p=" + std::to_string(p_) + ")");
    }
    void check_ab(int a, int b) const {
        if (a < 1 || a > N_ || b < 1 || b > N_)
            throw std::invalid_argument("gl(N) index out of range");
    }

    int N_, p_;
    mutable std::map<std::pair<int, int>, Matrix<Rat>> m_cache_;
    mutable std::map<std::tuple<int, int, int, int>, std::vector<std::pair<std::pair<int, int>, Rat>>> cg_cache_;
};

/// Report from the CG symmetry sweep: counterexamples carry the tuple and
/// the two mismatching values as strings.
struct CgSymmetryReport {
    bool pass = true;
    std::vector<std::string> counterexamples;
};

/// Verifies, over every valid tuple, the two trace-cyclicity relations
///   <j,m;l,n|r,s> = (-1)^{s+m} eta_j/eta_r <l,n;r,-s|j,-m>
///                 = (-1)^{s+n} eta_l/eta_r <r,-s;j,m|l,-n>
/// and the index-reflection relation
///   <j,m;l,n|r,s> = (j-m)!(l-n)!(r+s)! / ((j+m)!(l+n)!(r-s)!) <l,-n;j,-m|r,-s>.
inline CgSymmetryReport cg_symmetry_check(const PContext& ctx) {
    CgSymmetryReport rep;
    const int p = ctx.p();
    auto note = [&](const char* which, int j, int m, int l, int n, int r, int s) {
        rep.pass = false;
        rep.counterexamples.push_back(std::string(which) + " at (" + std::to_string(j) + "," +
                                      std::to_string(m) + ";" + std::to_string(l) + "," + std::to_string(n) +
                                      "|" + std::to_string(r) + "," + std::to_string(s) + ")");
    };
    for (int j = 0; j < p; ++j)
        for (int m = -j; m <= j; ++m)
            for (int l = 0; l < p; ++l)
                for (int n = -l; n <= l; ++n) {
                    const int s = m + n;
                    for (int r = std::abs(s); r < p; ++r) {
                        Rat lhs = ctx.cg(j, m, l, n, r, s);
                        Rat c1 = Rat(parity_sign(s + m)) * ctx.eta(j) / ctx.eta(r) * ctx.cg(l, n, r, -s, j, -m);
                        Rat c2 = Rat(parity_sign(s + n)) * ctx.eta(l) / ctx.eta(r) * ctx.cg(r, -s, j, m, l, -n);
                        if (lhs != c1) note("cyclicity-1", j, m, l, n, r, s);
                        if (lhs != c2) note("cyclicity-2", j, m, l, n, r, s);
                        Rat fac = factorial(j - m) * factorial(l - n) * factorial(r + s) /
                                  (factorial(j + m) * factorial(l + n) * factorial(r - s));
                        if (lhs != fac * ctx.cg(l, -n, j, -m, r, -s)) note("reflection", j, m, l, n, r, s);
                    }
                }
    return rep;
}

/// Formal expansion of the Appendix generating function
///   a(x,y,z,u) = u / ((1 + y(1-x)) (1 - u(1 + z + x(1-u))))
/// returning (j!)^2 * [x^{k-1} y^{j-m} z^j u^p] a. Matches a_coeff for
/// m >= 0; for m < 0 it reproduces a_coeff only after reindexing k by the
/// matrix row (k -> k - m), with spurious values at rows < 1 - m, so the
/// cross-check is meaningful for m >= 0 only. The factorial formula is the
/// one validated by the sl(2) relations.
inline Rat genfun_a_coeff(int p, int j, int m, int k) {
    const int X = k - 1, Y = j - m, Z = j, U = p;
    using Key = std::array<int, 4>;
    using Series = std::map<Key, Rat>;
    auto mul = [&](const Series& A, const Series& B) {
        Series C;
        for (const auto& [ka, ca] : A)
            for (const auto& [kb, cb] : B) {
                Key k2{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
                if (k2[0] > X || k2[1] > Y || k2[2] > Z || k2[3] > U) continue;
                C[k2] += ca * cb;
                if (is_zero(C[k2])) C.erase(k2);
            }
        return C;
    };
    auto add = [](Series A, const Series& B, int sign = 1) {
        for (const auto& [k2, c] : B) {
            A[k2] += Rat(sign) * c;
            if (is_zero(A[k2])) A.erase(k2);
        }
        return A;
    };
    Series one{{Key{0, 0, 0, 0}, Rat(1)}};
    Series x{{Key{1, 0, 0, 0}, Rat(1)}}, y{{Key{0, 1, 0, 0}, Rat(1)}};
    Series z{{Key{0, 0, 1, 0}, Rat(1)}}, u{{Key{0, 0, 0, 1}, Rat(1)}};
    Series d1 = add(one, mul(y, add(one, x, -1)));
    Series inner = add(add(one, z), mul(x, add(one, u, -1)));
    Series d2 = add(one, mul(u, inner), -1);
    Series den = mul(d1, d2);
    Series t = add(den, one, -1);  // den = 1 + t, t has no constant term
    Series inv = one, pw = one;
    for (int it = 0; it <= X + Y + Z + U; ++it) {
        pw = mul(pw, t);
        if (pw.empty()) break;
        inv = add(inv, pw, (it % 2 == 0) ? -1 : 1);
    }
    Series a = mul(u, inv);
    auto itc = a.find(Key{X, Y, Z, U});
    Rat c = itc == a.end() ? Rat(0) : itc->second;
    return c * factorial(j) * factorial(j);
}

}  // namespace truncw

#endif
