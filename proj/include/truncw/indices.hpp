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

#ifndef TRUNCW_INDICES_HPP
#define TRUNCW_INDICES_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace truncw {

/// Generator families.
///   W      : W-algebra generator W_j^{ab}        (mode = j, mag unused)
///   T      : Yangian generator T^{ab}_n          (mode = n, mag unused)
///   J      : gl(Np) current J^{ab}_{j,m}         (mode = j, mag = m)
///   Lambda : free soldering parameter lambda^{ab}_{j,-j}
///   Aux    : scratch symbols (formal parameters)
enum class Fam : std::uint8_t { W = 0, T = 1, J = 2, Lambda = 3, Aux = 4 };

inline const char* fam_name(Fam f) {
    switch (f) {
        case Fam::W: return "W";
        case Fam::T: return "T";
        case Fam::J: return "J";
        case Fam::Lambda: return "L";
        case Fam::Aux: return "X";
    }
    return "?";
}

/// One indexed generator symbol. Ordering is (family, mode, row, col, mag),
/// the tuple order fixed for canonical monomial forms.
struct Gen {
    Fam fam = Fam::W;
    std::int16_t mode = 0;  // j for W/J/Lambda, n for T
    std::int16_t mag = 0;   // magnetic index m (J/Lambda only)
    std::int16_t a = 1;     // gl(N) row, 1-based
    std::int16_t b = 1;     // gl(N) col, 1-based

    friend auto operator<=>(const Gen& x, const Gen& y) {
        if (auto c = x.fam <=> y.fam; c != 0) return c;
        if (auto c = x.mode <=> y.mode; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        return x.mag <=> y.mag;
    }
    friend bool operator==(const Gen&, const Gen&) = default;
};

inline Gen gen_W(int j, int a, int b) { return Gen{Fam::W, (std::int16_t)j, 0, (std::int16_t)a, (std::int16_t)b}; }
inline Gen gen_T(int n, int a, int b) { return Gen{Fam::T, (std::int16_t)n, 0, (std::int16_t)a, (std::int16_t)b}; }
inline Gen gen_J(int j, int m, int a, int b) { return Gen{Fam::J, (std::int16_t)j, (std::int16_t)m, (std::int16_t)a, (std::int16_t)b}; }
inline Gen gen_L(int j, int a, int b) { return Gen{Fam::Lambda, (std::int16_t)j, (std::int16_t)(-j), (std::int16_t)a, (std::int16_t)b}; }
inline Gen gen_aux(int id) { return Gen{Fam::Aux, (std::int16_t)id, 0, 0, 0}; }

inline std::string gen_str(const Gen& g) {
    std::string s = fam_name(g.fam);
    s += "[" + std::to_string(g.mode);
    if (g.fam == Fam::J || g.fam == Fam::Lambda) s += "," + std::to_string(g.mag);
    if (g.fam != Fam::Aux) s += ";" + std::to_string(g.a) + "," + std::to_string(g.b);
    s += "]";
    return s;
}

}  // namespace truncw

#endif
