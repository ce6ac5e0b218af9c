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

#ifndef TRUNCW_POLY2_HPP
#define TRUNCW_POLY2_HPP

#include <map>
#include <string>
#include <utility>

#include "truncw/rational.hpp"

namespace truncw {

/// Polynomial in the spectral parameters u, v with Rat coefficients.
/// Univariate polynomials are the v-degree-0 case.
class Poly2 {
  public:
    using Key = std::pair<int, int>;  // (deg_u, deg_v)
    using Terms = std::map<Key, Rat>;

    Poly2() = default;
    static Poly2 constant(const Rat& c) {
        Poly2 p;
        if (!truncw::is_zero(c)) p.t_[{0, 0}] = c;
        return p;
    }
    static Poly2 u(int k = 1) {
        Poly2 p;
        p.t_[{k, 0}] = Rat(1);
        return p;
    }
    static Poly2 v(int k = 1) {
        Poly2 p;
        p.t_[{0, k}] = Rat(1);
        return p;
    }
    static Poly2 term(int du, int dv, const Rat& c) {
        Poly2 p;
        if (!truncw::is_zero(c)) p.t_[{du, dv}] = c;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    int deg_u() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }
    int deg_v() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }
    bool is_univariate() const { return deg_v() <= 0; }

    void add_term(int du, int dv, const Rat& c) {
        if (truncw::is_zero(c)) return;
        auto it = t_.find({du, dv});
        if (it == t_.end()) {
            t_[{du, dv}] = c;
        } else {
            it->second += c;
            if (truncw::is_zero(it->second)) t_.erase(it);
        }
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend Poly2 operator-(const Poly2& a) {
        Poly2 r;
        for (const auto& [k, c] : a.t_) r.t_[k] = -c;
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Rat& s) {
        Poly2 r;
        if (truncw::is_zero(s)) return r;
        for (const auto& [k, c] : a.t_) r.t_[k] = c * s;
        return r;
    }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.t_ == b.t_; }

    Rat eval(const Rat& uval, const Rat& vval) const {
        Rat total(0);
        for (const auto& [k, c] : t_) {
            Rat t = c;
            for (int i = 0; i < k.first; ++i) t *= uval;
            for (int i = 0; i < k.second; ++i) t *= vval;
            total += t;
        }
        return total;
    }

    /// View as polynomial in u with coefficients in Q[v]: coefficient list
    /// indexed by u-degree (empty Poly2 = zero coefficient).
    std::map<int, Poly2> by_u() const {
        std::map<int, Poly2> out;
        for (const auto& [k, c] : t_) out[k.first].add_term(0, k.second, c);
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (!first) s += " + ";
            first = false;
            s += rat_str(c);
            if (k.first) s += "*u^" + std::to_string(k.first);
            if (k.second) s += "*v^" + std::to_string(k.second);
        }
        return s;
    }

  private:
    Terms t_;
};

}  // namespace truncw

#endif
