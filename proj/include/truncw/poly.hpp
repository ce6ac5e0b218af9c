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

#ifndef TRUNCW_POLY_HPP
#define TRUNCW_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "truncw/indices.hpp"
#include "truncw/rational.hpp"

namespace truncw {

/// Monomial: multiset of generators, kept sorted. Comparison is graded
/// lexicographic (total degree first), which makes polynomial equality a
/// structural comparison and all emitted output deterministic.
struct Monomial {
    std::vector<Gen> gens;  // sorted

    Monomial() = default;
    explicit Monomial(Gen g) : gens{g} {}
    explicit Monomial(std::vector<Gen> gs) : gens(std::move(gs)) {
        std::sort(gens.begin(), gens.end());
    }

    std::size_t degree() const { return gens.size(); }
    bool is_one() const { return gens.empty(); }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.gens.resize(gens.size() + o.gens.size());
        std::merge(gens.begin(), gens.end(), o.gens.begin(), o.gens.end(), r.gens.begin());
        return r;
    }

    /// Monomial with the i-th letter removed.
    Monomial without(std::size_t i) const {
        Monomial r = *this;
        r.gens.erase(r.gens.begin() + static_cast<long>(i));
        return r;
    }

    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.gens.size() <=> y.gens.size(); c != 0) return c;
        for (std::size_t i = 0; i < x.gens.size(); ++i)
            if (auto c = x.gens[i] <=> y.gens[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse commutative polynomial over Rat in indexed generators. Invariant:
/// no zero coefficients are stored, keys are canonical. Immutable use is the
/// norm; all operations return fresh values.
class Poly {
  public:
    using Terms = std::map<Monomial, Rat>;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c) {
        Poly p;
        if (!truncw::is_zero(c)) p.terms_[Monomial{}] = c;
        return p;
    }
    static Poly one() { return constant(Rat(1)); }
    static Poly gen(const Gen& g) {
        Poly p;
        p.terms_[Monomial(g)] = Rat(1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial (zero if absent).
    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (truncw::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (truncw::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        Poly r;
        if (truncw::is_zero(s)) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = c * s;
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Substitute generators via `sub`; generators for which `sub` returns
    /// nullopt are kept. Substitution is a ring homomorphism.
    Poly substitute(const std::function<std::optional<Poly>(const Gen&)>& sub) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Poly term = Poly::constant(c);
            for (const Gen& g : m.gens) {
                auto image = sub(g);
                term = image ? term * (*image) : term * Poly::gen(g);
                if (term.is_zero()) break;
            }
            out += term;
        }
        return out;
    }

    /// Formal partial derivative with respect to one generator.
    Poly derivative(const Gen& g) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = 0; i < m.gens.size(); ++i) {
                if (m.gens[i] == g) {
                    out.add_term(m.without(i), c);
                }
            }
        }
        return out;
    }

    /// Evaluate at a point given by a callback Gen -> Rat.
    Rat eval(const std::function<Rat(const Gen&)>& point) const {
        Rat total(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (const Gen& g : m.gens) t *= point(g);
            total += t;
        }
        return total;
    }

    /// Total-degree filter (used by the hbar-graded decompositions).
    template <class Pred>
    Poly filter(Pred&& keep) const {
        Poly out;
        for (const auto& [m, c] : terms_)
            if (keep(m)) out.terms_[m] = c;
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += rat_str(c);
            for (const Gen& g : m.gens) s += "*" + gen_str(g);
        }
        return s;
    }

  private:
    Terms terms_;
};

inline Poly pgen(const Gen& g) { return Poly::gen(g); }
inline Poly pconst(const Rat& c) { return Poly::constant(c); }
inline Poly pconst(long c) { return Poly::constant(Rat(c)); }

}  // namespace truncw

#endif
