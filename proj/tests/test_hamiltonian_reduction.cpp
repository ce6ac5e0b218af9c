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

#include "truncw/hamiltonian_reduction.hpp"
#include "truncw/walgebra_bases.hpp"

using namespace truncw;

TEST_CASE("current brackets: gl(N) sector and antisymmetry") {
    PContext c(2, 2);
    ReductionContext rc(c);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int cc = 1; cc <= 2; ++cc)
                for (int d = 1; d <= 2; ++d) {
                    Poly want;
                    if (b == cc) want += pgen(gen_J(0, 0, a, d));
                    if (a == d) want -= pgen(gen_J(0, 0, cc, b));
                    CHECK(rc.pb_currents(gen_J(0, 0, a, b), gen_J(0, 0, cc, d)) == want);
                }
    for (int p : {2, 3}) {
        PContext cp(2, p);
        ReductionContext rcp(cp);
        for (int j = 0; j < p; ++j)
            for (int m = -j; m <= j; ++m)
                for (int l = 0; l < p; ++l)
                    for (int n = -l; n <= l; ++n) {
                        Gen x = gen_J(j, m, 1, 2), y = gen_J(l, n, 2, 1);
                        CHECK(rcp.pb_currents(x, y) == -rcp.pb_currents(y, x));
                    }
    }
}

TEST_CASE("N=1 p=2 current table matches gl(2) structure constants in the M basis") {
    PContext c(1, 2);
    ReductionContext rc(c);
    auto J = [](int j, int m) { return gen_J(j, m, 1, 1); };
    CHECK(rc.pb_currents(J(1, 1), J(1, 0)) == pgen(J(1, 1)) * Rat(2));
    CHECK(rc.pb_currents(J(1, 1), J(1, -1)) == pgen(J(1, 0)) * Rat(2));
    CHECK(rc.pb_currents(J(1, 0), J(1, -1)) == pgen(J(1, -1)) * Rat(2));
    CHECK(rc.pb_currents(J(0, 0), J(1, 1)).is_zero());
}

TEST_CASE("soldering: gauge preserved, grading property, field-free solve") {
    PContext c(2, 2);
    ReductionContext rc(c);
    auto sol = solder_solve(rc);  // throws internally if gauge is not preserved
    // grading: solved lambda_{j,m} depends only on free lambdas with grade <= j+m
    for (const auto& [jm, Mat] : sol.lambda) {
        if (jm.second == -jm.first) continue;  // free
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (const auto& [mo, co] : Mat(a, b).terms()) {
                    int wdeg = 0;
                    for (const Gen& g : mo.gens)
                        if (g.fam == Fam::Lambda) CHECK(g.mode + g.mag <= jm.first + jm.second);
                    (void)wdeg;
                }
    }
    // all W = 0: the solved lambdas above the bottom row vanish
    for (const auto& [jm, Mat] : sol.lambda) {
        if (jm.second == -jm.first) continue;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Poly fieldfree = Mat(a, b).substitute([&](const Gen& g) -> std::optional<Poly> {
                    if (g.fam == Fam::W) return Poly();
                    return std::nullopt;
                });
                CHECK(fieldfree.is_zero());
            }
    }
}

TEST_CASE("soldering table is antisymmetric and reproduces the closed forms") {
    for (auto [N, p] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
        PContext c(N, p);
        ReductionContext rc(c);
        BracketTable S = solder_table(rc);
        INFO("(N,p) = (" << N << "," << p << ")");
        for (int j = 0; j < p; ++j)
            for (int l = 0; l < p; ++l)
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b)
                        for (int cc = 1; cc <= N; ++cc)
                            for (int d = 1; d <= N; ++d) {
                                const Poly& x = S.at({WSlot{j, a, b}, WSlot{l, cc, d}});
                                const Poly& y = S.at({WSlot{l, cc, d}, WSlot{j, a, b}});
                                CHECK(x == -y);
                            }
        for (int l = 0; l < p; ++l)
            for (int a = 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b)
                    for (int cc = 1; cc <= N; ++cc)
                        for (int d = 1; d <= N; ++d) {
                            CHECK(S.at({WSlot{0, a, b}, WSlot{l, cc, d}}) == pb_w0(rc, a, b, l, cc, d));
                            if (p >= 2)
                                CHECK(S.at({WSlot{1, a, b}, WSlot{l, cc, d}}) == pb_w1(rc, a, b, l, cc, d));
                        }
    }
}

TEST_CASE("pb_w0 / pb_w1 closed-form spot values") {
    SECTION("N=1: pb_w0 vanishes") {
        PContext c(1, 3);
        ReductionContext rc(c);
        for (int j = 0; j < 3; ++j) CHECK(pb_w0(rc, 1, 1, j, 1, 1).is_zero());
    }
    SECTION("N=2 p=2 example value") {
        PContext c(2, 2);
        ReductionContext rc(c);
        Poly want = (pgen(gen_W(1, 1, 1)) - pgen(gen_W(1, 2, 2))) * rat(1, 2);
        CHECK(pb_w0(rc, 1, 2, 1, 2, 1) == want);
    }
    SECTION("W_{j+1} coefficient of pb_w1") {
        PContext c(2, 3);
        ReductionContext rc(c);
        const int p = 3;
        for (int j = 0; j + 1 <= p - 1; ++j) {
            Poly b = pb_w1(rc, 1, 2, j, 2, 1);  // delta^{cb} = delta^{22}? indices: c=2,b=2 no...
            // use (a,b,c,d) = (1,2,2,1): delta^{cb} = delta^{22} = 1, delta^{ad} = delta^{11} = 1
            Rat coeff = Rat(3 * (j + 1) * (p * p - (j + 1) * (j + 1))) / Rat(p * (p * p - 1) * (2 * j + 3));
            CHECK(b.coeff(Monomial(gen_W(j + 1, 1, 1))) == coeff);
            CHECK(b.coeff(Monomial(gen_W(j + 1, 2, 2))) == -coeff);
        }
    }
    SECTION("truncation self-consistency at j = p-1") {
        PContext c(2, 2);
        ReductionContext rc(c);
        Poly b = pb_w1(rc, 1, 2, 1, 2, 1);
        for (const auto& [mo, co] : b.terms())
            for (const Gen& g : mo.gens) CHECK(g.mode <= 1);
    }
    SECTION("p=1 rejected") {
        PContext c(2, 1);
        ReductionContext rc(c);
        CHECK_THROWS(pb_w1(rc, 1, 1, 0, 1, 1));
    }
}

TEST_CASE("Delta matrix: nilpotency, inverse, field-independent part") {
    for (auto [N, p] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
        PContext c(N, p);
        ReductionContext rc(c);
        DeltaMatrix dm = build_delta(rc);
        INFO("(N,p) = (" << N << "," << p << ")");
        CHECK(dm.nilpotency_index <= 2 * p - 1);
        const std::size_t n = dm.constraints.size();
        CHECK(n == static_cast<std::size_t>(N * N * p * (p - 1)));
        // Delta * Dbar == identity as Poly matrices
        Matrix<Poly> prod = dm.delta * dm.dbar;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(prod(i, j) == ((i == j) ? Poly::one() : Poly()));
        // W -> 0 kills Dhat
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Poly ff = dm.dhat(i, j).substitute([&](const Gen& g) -> std::optional<Poly> {
                    if (g.fam == Fam::W) return Poly();
                    return std::nullopt;
                });
                CHECK(ff.is_zero());
            }
    }
}

TEST_CASE("Delta closed-form comparison: field part equal, constant part negated") {
    for (auto [N, p] : {std::pair{1, 2}, {2, 2}}) {
        PContext c(N, p);
        ReductionContext rc(c);
        DeltaMatrix dm = build_delta(rc);
        auto rep = delta_closed_form_check(rc, dm);
        INFO("(N,p) = (" << N << "," << p << ")");
        CHECK(rep.field_parts_equal);
        CHECK(rep.const_parts_negated);
    }
}

TEST_CASE("Dirac compatibility {X, phi}* = 0 and bracket examples") {
    for (auto [N, p] : {std::pair{1, 2}, {2, 2}}) {
        PContext c(N, p);
        ReductionContext rc(c);
        DeltaMatrix dm = build_delta(rc);
        INFO("(N,p) = (" << N << "," << p << ")");
        for (int j = 0; j < p; ++j)
            for (int m = -j; m <= j; ++m)
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b)
                        for (const Gen& phi : dm.constraints.phis)
                            CHECK(dirac_bracket(rc, dm, pgen(gen_J(j, m, a, b)), pgen(phi)).is_zero());
        // {W_0^{ab}, W_j^{cd}}* is the unit-coefficient gl(N) rotation
        for (int j = 0; j < p; ++j)
            for (int a = 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b)
                    for (int cc = 1; cc <= N; ++cc)
                        for (int d = 1; d <= N; ++d) {
                            Poly got = dirac_bracket(rc, dm, pgen(gen_J(0, 0, a, b)), pgen(gen_J(j, j, cc, d)));
                            Poly want;
                            if (b == cc) want += pgen(gen_W(j, a, d));
                            if (a == d) want -= pgen(gen_W(j, cc, b));
                            CHECK(got == want);
                        }
    }
}

TEST_CASE("Dirac bracket Jacobi at N=1 p=2 (two surviving generators)") {
    PContext c(1, 2);
    ReductionContext rc(c);
    DeltaMatrix dm = build_delta(rc);
    BracketTable D = dirac_table(rc, dm);
    // all brackets of the two generators vanish, so Jacobi is immediate;
    // assert the table is explicitly zero (N=1 reduced algebra is abelian)
    for (const auto& [k, v] : D) CHECK(v.is_zero());
}

TEST_CASE("Dirac hbar grading: nonnegative exponents, hbar^0 is the loop bracket") {
    for (auto [N, p] : {std::pair{1, 2}, {2, 2}}) {
        PContext c(N, p);
        ReductionContext rc(c);
        DeltaMatrix dm = build_delta(rc);
        BracketTable D = dirac_table(rc, dm);
        INFO("(N,p) = (" << N << "," << p << ")");
        for (const auto& [key, entry] : D) {
            const auto& [x, y] = key;
            auto comps = dirac_hbar_components(x.j, y.j, entry);
            Poly want;
            if (x.j + y.j <= p - 1) {
                if (x.b == y.a) want += pgen(gen_W(x.j + y.j, x.a, y.b));
                if (x.a == y.b) want -= pgen(gen_W(x.j + y.j, y.a, x.b));
            }
            for (const auto& [r, part] : comps) CHECK(r >= 0);
            Poly h0 = comps.count(0) ? comps.at(0) : Poly();
            CHECK(h0 == want);
        }
    }
}

TEST_CASE("normalization map: soldering table = C(W) * Dirac table") {
    for (auto [N, p] : {std::pair{1, 2}, {2, 2}}) {
        PContext c(N, p);
        ReductionContext rc(c);
        BracketTable S = solder_table(rc);
        DeltaMatrix dm = build_delta(rc);
        BracketTable D = dirac_table(rc, dm);
        auto nm = normalization_map(rc, S, D);
        INFO("(N,p) = (" << N << "," << p << ")");
        REQUIRE(nm.found);
        CHECK(normalization_map_verifies(rc, nm, S, D));
        // row 0 of the map is the pure 1/p rescaling toward the Dirac rows
        // (empty when both tables vanish identically, as at N = 1)
        if (N >= 2) CHECK(nm.C.at({WSlot{0, 1, 1}, WSlot{0, 1, 1}}).coeff(Monomial{}) == rat(1, p));
    }
}
