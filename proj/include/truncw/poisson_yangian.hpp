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

#ifndef TRUNCW_POISSON_YANGIAN_HPP
#define TRUNCW_POISSON_YANGIAN_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "truncw/poly.hpp"

namespace truncw {

/// The Poisson Yangian on gl(N) and its truncation at order p.
///
/// The component brackets are not transcribed from the printed component
/// equations (the two displayed copies disagree in index placement); they
/// are derived programmatically from the matrix relation
///   (u - v) {T^{ij}(u), T^{kl}(v)} = T^{kj}(u) T^{il}(v) - T^{il}(u) T^{kj}(v)
/// by expanding both sides in u^{-1}, v^{-1}. The derivation yields, for
/// each mode pair (m, n), signed pairs (r, s) with
///   {T^{ij}_m, T^{kl}_n} = sum  sign * T^{kj}_r T^{il}_s,
/// which reproduces the first displayed component formula.
class YangianContext {
  public:
    /// p <= 0 means untruncated.
    YangianContext(int N, int p) : N_(N), p_(p) {
        if (N < 1) throw std::invalid_argument("YangianContext: N >= 1 required");
    }

    int N() const { return N_; }
    int p() const { return p_; }
    bool truncated() const { return p_ > 0; }

    struct ModePair {
        int r, s;
        int sign;
    };

    /// Signed (r, s) pairs of the derived component relation for modes (m, n).
    const std::vector<ModePair>& derived_pairs(int m, int n) const {
        auto key = std::make_pair(m, n);
        auto it = pairs_cache_.find(key);
        if (it != pairs_cache_.end()) return it->second;
        // Coefficient of u^{-m} v^{-n} in [A(u)B(v) - B(u)A(v)] / (u - v) with
        // A = T^{kj}, B = T^{il}:
        //   (u^{-r} v^{-s} - u^{-s} v^{-r}) / (u - v)
        //     = sum_{t=0}^{d-1} u^{-(r+d-t)} v^{-(r+1+t)},  d = s - r > 0.
        std::map<std::pair<int, int>, int> acc;
        const int R = m + n + 2;
        for (int r = 0; r < R; ++r)
            for (int s = r + 1; s < R; ++s) {
                const int d = s - r;
                for (int t = 0; t < d; ++t) {
                    if (r + d - t == m && r + 1 + t == n) {
                        acc[{r, s}] += 1;
                        acc[{s, r}] -= 1;
                    }
                }
            }
        std::vector<ModePair> out;
        for (const auto& [rs, sg] : acc)
            if (sg != 0) out.push_back({rs.first, rs.second, sg});
        return pairs_cache_.emplace(key, std::move(out)).first->second;
    }

    /// {T^{ij}_m, T^{kl}_n} as a Poly in T generators. T_0 = delta is
    /// substituted eagerly; in a truncated context, modes > p are dropped.
    Poly bracket_gen(int m, int n, int i, int j, int k, int l) const {
        check(m, i, j);
        check(n, k, l);
        Poly out;
        for (const auto& mp : derived_pairs(m, n)) {
            Poly t = letter(mp.r, k, j);
            if (t.is_zero()) continue;
            Poly t2 = letter(mp.s, i, l);
            if (t2.is_zero()) continue;
            out += (t * t2) * Rat(mp.sign);
        }
        return out;
    }

    /// Leibniz extension to polynomials in the T generators.
    Poly bracket(const Poly& x, const Poly& y) const {
        Poly out;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms())
                for (std::size_t i = 0; i < mx.gens.size(); ++i)
                    for (std::size_t j = 0; j < my.gens.size(); ++j) {
                        const Gen& g1 = mx.gens[i];
                        const Gen& g2 = my.gens[j];
                        Poly br = bracket_gen(g1.mode, g2.mode, g1.a, g1.b, g2.a, g2.b);
                        if (br.is_zero()) continue;
                        Poly rest;
                        rest.add_term(mx.without(i).times(my.without(j)), cx * cy);
                        out += br * rest;
                    }
        return out;
    }

    /// Truncation as a substitution: every generator of mode > p maps to 0.
    Poly truncate(const Poly& x) const {
        if (!truncated()) return x;
        return x.filter([&](const Monomial& mo) {
            for (const Gen& g : mo.gens)
                if (g.fam == Fam::T && g.mode > p_) return false;
            return true;
        });
    }

    /// hbar grading: a monomial in T letters carries grade sum(mode - 1);
    /// the bracket of T_m with T_n splits as sum_r hbar^r phi_r with
    /// r = (m + n - 2) - grade. phi_0 is the truncated loop-algebra term.
    std::map<int, Poly> hbar_components(int m, int n, int i, int j, int k, int l) const {
        Poly b = bracket_gen(m, n, i, j, k, l);
        std::map<int, Poly> out;
        const int base = m + n - 2;
        for (const auto& [mo, c] : b.terms()) {
            int grade = 0;
            for (const Gen& g : mo.gens) grade += g.mode - 1;
            out[base - grade].add_term(mo, c);
        }
        return out;
    }

    /// Graded component of the bracket of two grade-homogeneous polynomials;
    /// the r-th deformation cochain evaluated on (x, y).
    Poly graded_bracket_component(const Poly& x, const Poly& y, int r) const {
        auto grade_of = [](const Monomial& mo) {
            int g = 0;
            for (const Gen& gg : mo.gens) g += gg.mode - 1;
            return g;
        };
        Poly out;
        std::map<int, Poly> xs, ys;
        for (const auto& [mo, c] : x.terms()) xs[grade_of(mo)].add_term(mo, c);
        for (const auto& [mo, c] : y.terms()) ys[grade_of(mo)].add_term(mo, c);
        for (const auto& [gx, px] : xs)
            for (const auto& [gy, py] : ys) {
                Poly b = bracket(px, py);
                for (const auto& [mo, c] : b.terms())
                    if (gx + gy - grade_of(mo) == r) out.add_term(mo, c);
            }
        return out;
    }

    // ---- quantum (noncommutative) layer: ordered words ----

    struct Letter {
        int mode, a, b;
        friend bool operator==(const Letter&, const Letter&) = default;
    };
    using Word = std::vector<Letter>;
    using FormalSum = std::vector<std::pair<Rat, Word>>;

    /// RHS of [T^{ij}_m, T^{kl}_n] as an ordered formal sum, without
    /// normal-forming. T_0 = delta collapsed; 2*min(m,n) words before the
    /// collapse.
    FormalSum quantum_commutator_rhs(int m, int n, int i, int j, int k, int l) const {
        check(m, i, j);
        check(n, k, l);
        FormalSum out;
        for (int r = 0; r < std::min(m, n); ++r) {
            const int hi = m + n - 1 - r;
            if (r == 0) {
                if (k == j) out.push_back({Rat(1), Word{{hi, i, l}}});
                if (i == l) out.push_back({Rat(-1), Word{{hi, k, j}}});
            } else {
                out.push_back({Rat(1), Word{{r, k, j}, {hi, i, l}}});
                out.push_back({Rat(-1), Word{{hi, k, j}, {r, i, l}}});
            }
        }
        return out;
    }

    /// Rewrites a two-letter word with the higher mode on the left into an
    /// equivalent formal sum in which every word carries its high-mode
    /// letter rightmost (the executable content of [Y(N), T_p] c Y(N) T_p:
    /// the commutator correction has strictly smaller right mode, so the
    /// recursion terminates).
    FormalSum rewrite_tail(const Word& w) const {
        if (w.size() != 2 || w[0].mode < w[1].mode)
            throw std::invalid_argument("rewrite_tail: expected two letters, high mode left");
        FormalSum out;
        rewrite_rec(Rat(1), w, out);
        return out;
    }

  private:
    void rewrite_rec(const Rat& c, const Word& w, FormalSum& out) const {
        if (w.size() != 2 || w[0].mode <= w[1].mode) {
            out.push_back({c, w});
            return;
        }
        const auto [M, kk, jj] = w[0];
        const auto [r, ii, ll] = w[1];
        out.push_back({c, Word{{r, ii, ll}, {M, kk, jj}}});
        // + [T^{kj}_M, T^{il}_r]
        for (auto& [c2, w2] : quantum_commutator_rhs(M, r, kk, jj, ii, ll)) {
            if (w2.size() == 2 && w2[0].mode > w2[1].mode)
                rewrite_rec(c * c2, w2, out);
            else
                out.push_back({c * c2, w2});
        }
    }

    Poly letter(int mode, int a, int b) const {
        if (mode == 0) return a == b ? Poly::one() : Poly::zero();
        if (truncated() && mode > p_) return Poly::zero();
        return pgen(gen_T(mode, a, b));
    }
    void check(int m, int a, int b) const {
        if (m < 1) throw std::invalid_argument("bracket_gen: modes must be >= 1 (mode 0 is the constant)");
        if (truncated() && m > p_) throw std::invalid_argument("bracket_gen: mode exceeds truncation");
        if (a < 1 || a > N_ || b < 1 || b > N_) throw std::invalid_argument("bracket_gen: gl(N) index range");
    }

    int N_, p_;
    mutable std::map<std::pair<int, int>, std::vector<ModePair>> pairs_cache_;
};

/// Jacobi sweep; failures carry the offending triple and the residual.
struct JacobiReport {
    bool pass = true;
    std::vector<std::string> failures;
};

inline JacobiReport jacobi_check(const YangianContext& ctx, const std::vector<std::array<Poly, 3>>& triples) {
    JacobiReport rep;
    for (const auto& t : triples) {
        Poly s = ctx.bracket(t[0], ctx.bracket(t[1], t[2]));
        s += ctx.bracket(t[1], ctx.bracket(t[2], t[0]));
        s += ctx.bracket(t[2], ctx.bracket(t[0], t[1]));
        if (!s.is_zero()) {
            rep.pass = false;
            rep.failures.push_back("residual " + s.str());
        }
    }
    return rep;
}

}  // namespace truncw

#endif
