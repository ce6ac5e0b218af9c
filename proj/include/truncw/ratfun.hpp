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

#ifndef TRUNCW_RATFUN_HPP
#define TRUNCW_RATFUN_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "truncw/poly2.hpp"

namespace truncw {
namespace detail {

// --- univariate helpers (pure v-polynomials as coefficient ring of Q[v][u]) ---

inline std::vector<Rat> to_vcoeffs(const Poly2& p) {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(p.deg_v(), 0)) + 1, Rat(0));
    for (const auto& [k, co] : p.terms()) c[static_cast<std::size_t>(k.second)] = co;
    if (p.is_zero()) c.clear();
    return c;
}

inline Poly2 from_vcoeffs(const std::vector<Rat>& c) {
    Poly2 p;
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(0, static_cast<int>(i), c[i]);
    return p;
}

inline std::vector<Rat> vtrim(std::vector<Rat> a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
    return a;
}

inline std::vector<Rat> vrem(std::vector<Rat> a, const std::vector<Rat>& b) {
    a = vtrim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = vtrim(std::move(a));
    }
    return a;
}

inline std::vector<Rat> vgcd(std::vector<Rat> a, std::vector<Rat> b) {
    a = vtrim(std::move(a));
    b = vtrim(std::move(b));
    while (!b.empty()) {
        auto r = vrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& x : a) x /= lead;  // monic normalization
    }
    return a;
}

inline std::optional<std::vector<Rat>> vdiv_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    a = vtrim(std::move(a));
    if (b.empty()) return std::nullopt;
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = vtrim(std::move(a));
    }
    if (!a.empty()) return std::nullopt;
    return q;
}

// --- Q[v][u] layer ---

inline Poly2 content_u(const Poly2& p) {
    // gcd over all u-coefficients (each in Q[v]); result monic in v.
    std::vector<Rat> g;
    for (const auto& [du, coef] : p.by_u()) {
        g = vgcd(std::move(g), to_vcoeffs(coef));
        if (g.size() == 1) break;
    }
    return from_vcoeffs(g);
}

inline std::optional<Poly2> div_exact(const Poly2& a, const Poly2& b);

inline Poly2 mul_upow(const Poly2& p, int k) { return p * Poly2::u(k); }

/// Exact division in Q[v][u]; nullopt when not divisible.
inline std::optional<Poly2> div_exact(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) return std::nullopt;
    Poly2 rem = a;
    Poly2 q;
    auto bu = b.by_u();
    int db = b.deg_u();
    auto blead = to_vcoeffs(bu[db]);
    while (!rem.is_zero() && rem.deg_u() >= db) {
        auto ru = rem.by_u();
        int dr = rem.deg_u();
        auto rl = to_vcoeffs(ru[dr]);
        auto f = vdiv_exact(rl, blead);
        if (!f) return std::nullopt;
        Poly2 fq = mul_upow(from_vcoeffs(*f), dr - db);
        q = q + fq;
        rem = rem - fq * b;
        if (!rem.is_zero() && rem.deg_u() >= dr && dr >= 0) {
            // no progress (can happen only on malformed input)
            auto ru2 = rem.by_u();
            if (ru2.count(dr)) return std::nullopt;
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

/// Pseudo-remainder of a by b in the u-direction.
inline Poly2 prem_u(Poly2 a, const Poly2& b) {
    int db = b.deg_u();
    auto blead_map = b.by_u();
    Poly2 blead = blead_map[db];
    int steps = a.deg_u() - db + 1;
    for (int s = 0; s < steps && !a.is_zero() && a.deg_u() >= db; ++s) {
        auto au = a.by_u();
        int da = a.deg_u();
        Poly2 alead = au[da];
        a = a * blead - mul_upow(alead, da - db) * b;
    }
    return a;
}

/// GCD in Q[u, v] via primitive PRS in the u-direction (falls back to the
/// pure-v gcd when both inputs are u-free). Result is primitive with monic
/// leading u-coefficient.
inline Poly2 gcd(Poly2 a, Poly2 b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.deg_u() <= 0 && b.deg_u() <= 0)
        return from_vcoeffs(vgcd(to_vcoeffs(a), to_vcoeffs(b)));
    if (a.deg_u() < b.deg_u()) std::swap(a, b);
    Poly2 ca = content_u(a), cb = content_u(b);
    Poly2 cont = from_vcoeffs(vgcd(to_vcoeffs(ca), to_vcoeffs(cb)));
    Poly2 pa = *div_exact(a, ca);
    Poly2 pb = *div_exact(b, cb);
    while (!pb.is_zero()) {
        Poly2 r = prem_u(pa, pb);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Poly2();
        } else {
            pb = *div_exact(r, content_u(r));
        }
    }
    // pa = primitive gcd; normalize leading u-coefficient monic in v, positive lead
    Poly2 lead = pa.by_u()[pa.deg_u()];
    auto lv = to_vcoeffs(lead);
    Rat scale = lv.empty() ? Rat(1) : lv.back();
    Poly2 norm;
    for (const auto& [k, c] : pa.terms()) norm.add_term(k.first, k.second, c / scale);
    return norm * cont;
}

}  // namespace detail

/// Rational function in the spectral parameters, stored reduced: the
/// numerator/denominator gcd is divided out eagerly and the denominator's
/// leading coefficient (graded-lex greatest term) is normalized to 1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Poly2::constant(Rat(1))) {}
    RationalFunction(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        reduce();
    }
    static RationalFunction from_poly(Poly2 p) { return RationalFunction(std::move(p), Poly2::constant(Rat(1))); }
    static RationalFunction constant(const Rat& c) { return from_poly(Poly2::constant(c)); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    /// Equality by cross multiplication (both sides stored reduced).
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Evaluation at a rational point; throws if the denominator vanishes there.
    Rat eval(const Rat& u, const Rat& v = Rat(0)) const {
        Rat d = den_.eval(u, v);
        if (truncw::is_zero(d)) throw std::domain_error("RationalFunction: pole at evaluation point");
        return num_.eval(u, v) / d;
    }

    std::string str() const {
        if (den_ == Poly2::constant(Rat(1))) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly2::constant(Rat(1));
            return;
        }
        Poly2 g = detail::gcd(num_, den_);
        if (auto qn = detail::div_exact(num_, g)) {
            if (auto qd = detail::div_exact(den_, g)) {
                num_ = *qn;
                den_ = *qd;
            }
        }
        // normalize denominator leading (graded-lex greatest) coefficient to 1
        const auto& t = den_.terms();
        auto lead = t.begin();
        for (auto it = t.begin(); it != t.end(); ++it) {
            auto deg = [](const Poly2::Key& k) { return k.first + k.second; };
            if (deg(it->first) > deg(lead->first) ||
                (deg(it->first) == deg(lead->first) && it->first > lead->first))
                lead = it;
        }
        Rat s = lead->second;
        Poly2 n2, d2;
        for (const auto& [k, c] : num_.terms()) n2.add_term(k.first, k.second, c / s);
        for (const auto& [k, c] : den_.terms()) d2.add_term(k.first, k.second, c / s);
        num_ = n2;
        den_ = d2;
    }

    Poly2 num_, den_;
};

}  // namespace truncw

#endif
