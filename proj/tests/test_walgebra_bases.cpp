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

#include <catch2/catch_amalgamated.hpp>

#include "truncw/walgebra_bases.hpp"

using namespace truncw;

namespace {

struct Setup {
    PContext ctx;
    ReductionContext rc;
    BracketTable S;
    Setup(int N, int p) : ctx(N, p), rc(ctx), S(solder_table(rc)) {}
};

Poly family_product(const WBarFamily& fam, const std::vector<int>& modes, int a, int b) {
    const int N = fam.N;
    std::function<Poly(int, std::size_t)> rec = [&](int idx, std::size_t pos) -> Poly {
        if (pos + 1 == modes.size())
            return fam.gens[static_cast<std::size_t>(modes[pos])](idx - 1, b - 1);
        Poly acc;
        for (int e = 1; e <= N; ++e)
            acc += fam.gens[static_cast<std::size_t>(modes[pos])](idx - 1, e - 1) * rec(e, pos + 1);
        return acc;
    };
    return rec(a, 0);
}

void check_pbn_rows(const Setup& s, const WBarFamily& fam) {
    const int N = s.ctx.N(), p = s.ctx.p();
    for (int j = 0; j < p; ++j)
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b)
                for (int c = 1; c <= N; ++c)
                    for (int d = 1; d <= N; ++d) {
                        Poly got = table_bracket(s.S, fam.gens[0](a - 1, b - 1), fam.gens[static_cast<std::size_t>(j)](c - 1, d - 1));
                        Poly want;
                        if (c == b) want += fam.gens[static_cast<std::size_t>(j)](a - 1, d - 1);
                        if (a == d) want -= fam.gens[static_cast<std::size_t>(j)](c - 1, b - 1);
                        CHECK(got == want);
                    }
    for (int j = 1; j + 1 <= static_cast<int>(fam.gens.size()) - 1 && j < p; ++j)
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b)
                for (int c = 1; c <= N; ++c)
                    for (int d = 1; d <= N; ++d) {
                        Poly got = table_bracket(s.S, fam.gens[1](a - 1, b - 1), fam.gens[static_cast<std::size_t>(j)](c - 1, d - 1));
                        Poly want;
                        if (c == b) want += fam.gens[static_cast<std::size_t>(j) + 1](a - 1, d - 1);
                        if (a == d) want -= fam.gens[static_cast<std::size_t>(j) + 1](c - 1, b - 1);
                        want += fam.gens[0](c - 1, b - 1) * fam.gens[static_cast<std::size_t>(j)](a - 1, d - 1);
                        want -= fam.gens[static_cast<std::size_t>(j)](c - 1, b - 1) * fam.gens[0](a - 1, d - 1);
                        CHECK(got == want);
                    }
}

void check_endpoint_coefficients(const WBarFamily& fam) {
    const int N = fam.N, p = fam.p, sign = fam.sign;
    for (std::size_t j = 0; j < fam.gens.size() && j < static_cast<std::size_t>(p); ++j) {
        Rat lead = Rat(sign < 0 ? parity_sign(static_cast<long>(j)) : 1) *
                   factorial(static_cast<long>(j)) * factorial(static_cast<long>(j)) *
                   binomial(p + static_cast<long>(j), 2 * static_cast<long>(j) + 1);
        Rat trail = sign < 0 ? binomial(p, static_cast<long>(j) + 1)
                             : binomial(p + static_cast<long>(j), static_cast<long>(j) + 1);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                const Poly& P = fam.gens[j](a - 1, b - 1);
                CHECK(P.coeff(Monomial(gen_W(static_cast<int>(j), a, b))) == lead);
                // substitute W_0 -> x * Id, higher W -> 0: expect trail * x^{j+1} on the diagonal
                Poly sub = P.substitute([&](const Gen& g) -> std::optional<Poly> {
                    if (g.fam != Fam::W) return std::nullopt;
                    if (g.mode == 0) return g.a == g.b ? pgen(gen_aux(0)) : Poly();
                    return Poly();
                });
                Poly want;
                if (a == b) {
                    std::vector<Gen> xs(j + 1, gen_aux(0));
                    want.add_term(Monomial(std::move(xs)), trail);
                }
                CHECK(sub == want);
            }
    }
}

}  // namespace

TEST_CASE("seeds: p=1 degenerate forms") {
    Setup s(2, 1);
    WBarFamily fm = wbar_family(s.rc, s.S, -1, 1);
    WBarFamily fp = wbar_family(s.rc, s.S, +1, 1);
    // Wb_0 = p W_0
    CHECK(fm.gens[0](0, 0) == pgen(gen_W(0, 1, 1)));
    // minus: Wb_1 = 0; plus: Wb_1 = (W_0 W_0)
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(fm.gens[1](a, b).is_zero());
            CHECK(fp.gens[1](a, b) == wprod(2, {0, 0}, a + 1, b + 1));
        }
}

TEST_CASE("eq.PBn rows and endpoint closed forms, N=2, p=2,3") {
    for (int p : {2, 3}) {
        Setup s(2, p);
        for (int sign : {-1, +1}) {
            WBarFamily fam = wbar_build(s.rc, s.S, sign, p);
            INFO("p = " << p << " sign " << sign);
            check_pbn_rows(s, fam);
            check_endpoint_coefficients(fam);
        }
    }
}

TEST_CASE("N=1 families via universal coefficients") {
    for (int p : {2, 3}) {
        Setup s(1, p);
        for (int sign : {-1, +1}) {
            WBarFamily fam = wbar_family(s.rc, s.S, sign, p);
            INFO("p = " << p << " sign " << sign);
            check_endpoint_coefficients(fam);
        }
    }
}

TEST_CASE("truncation: minus family vanishes at level p, plus does not") {
    for (auto [N, p] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}}) {
        Setup s(N, p);
        auto rep = truncation_check(s.rc, s.S);
        INFO("(N,p) = (" << N << "," << p << ")");
        CHECK(rep.minus_vanishes);
        CHECK(rep.plus_nonzero);
    }
}

TEST_CASE("change of basis with upper limit n = j+1") {
    // j = 0: shared Wb_0; j = 1: Wb^+_1 = -Wb^-_1 + Wb_0 Wb_0 (and the seeds
    // sum to p^2 W_0 W_0); j = 2 compared against the recursively built family.
    for (auto [N, p] : {std::pair{2, 2}, {1, 2}, {2, 3}}) {
        Setup s(N, p);
        WBarFamily fm = wbar_family(s.rc, s.S, -1, std::min(p, 2));
        WBarFamily fp = wbar_family(s.rc, s.S, +1, std::min(p, 2));
        INFO("(N,p) = (" << N << "," << p << ")");
        for (int j = 0; j <= std::min(p, 2); ++j) {
            if (j >= static_cast<int>(fm.gens.size())) break;
            Matrix<Poly> viaM = change_of_basis(fm, j);  // builds Wb^+_j from the minus family
            Matrix<Poly> viaP = change_of_basis(fp, j);  // builds Wb^-_j from the plus family
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    CHECK(viaM(a, b) == fp.gens[static_cast<std::size_t>(j)](a, b));
                    CHECK(viaP(a, b) == fm.gens[static_cast<std::size_t>(j)](a, b));
                }
        }
        // seed sum: Wb^+_1 + Wb^-_1 = p^2 (W_0 W_0)
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b)
                CHECK(fp.gens[1](a - 1, b - 1) + fm.gens[1](a - 1, b - 1) ==
                      wprod(N, {0, 0}, a, b) * Rat(p * p));
    }
}

TEST_CASE("auxiliary identity: no delta^{ab}/delta^{cd} terms in {Wb_1, Wb_j}") {
    // the proof uses that {Wb_1^{ab}, Wb_j^{cd}} has no pure-trace delta
    // terms; verified here by checking the bracket of the traceless parts
    // stays consistent: {Wb_1^{aa}, P_j^{bb}} = 0 for the built family.
    Setup s(2, 3);
    WBarFamily fam = wbar_build(s.rc, s.S, -1, 2);
    Poly tr1, trj;
    for (int e = 0; e < 2; ++e) {
        tr1 += fam.gens[1](e, e);
        trj += fam.gens[2](e, e);
    }
    CHECK(table_bracket(s.S, tr1, trj).is_zero());
}

TEST_CASE("identification with the truncated Poisson Yangian") {
    for (auto [N, p] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}) {
        Setup s(N, p);
        auto rep = identify_with_yangian(s.rc, s.S);
        INFO("(N,p) = (" << N << "," << p << ")");
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.pass);
    }
}

TEST_CASE("W2Wj auxiliary bracket identity on built families") {
    // {Wb_2, Wb_j} evaluated through the table agrees with the Yangian image,
    // which is the executable content of the proof's auxiliary display.
    Setup s(2, 3);
    WBarFamily fam = wbar_build(s.rc, s.S, -1, 2);
    YangianContext yc(2, 3);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (int d = 1; d <= 2; ++d) {
                    Poly lhs = table_bracket(s.S, fam.gens[2](a - 1, b - 1), fam.gens[1](c - 1, d - 1));
                    Poly yg = yc.bracket_gen(3, 2, a, b, c, d);
                    Poly rhs = yg.substitute([&](const Gen& g) -> std::optional<Poly> {
                        if (g.fam != Fam::T) return std::nullopt;
                        return fam.gens[static_cast<std::size_t>(g.mode - 1)](g.a - 1, g.b - 1);
                    });
                    CHECK(lhs == rhs);
                }
}
