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

#ifndef TRUNCW_REPRESENTATIONS_HPP
#define TRUNCW_REPRESENTATIONS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "truncw/linalg.hpp"
#include "truncw/matrix.hpp"
#include "truncw/ratfun.hpp"

namespace truncw {

/// Exact highest-weight gl(N) irrep. Built representations live in a
/// non-orthonormal basis with rational action-matrix entries; the highest
/// weight vector sits at index 0.
struct GlnIrrep {
    int N = 1;
    std::size_t dim = 1;
    std::vector<Rat> weight;                       // lambda_1 >= ... >= lambda_N (rational shift allowed)
    std::map<std::pair<int, int>, Matrix<Rat>> action;  // (i, j) -> matrix of E_ij

    const Matrix<Rat>& E(int i, int j) const { return action.at({i, j}); }
};

namespace detail_rep {
inline void sym_basis_rec(int i, int N, int rem, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (i == N - 1) {
        cur.push_back(rem);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = rem; v >= 0; --v) {
        cur.push_back(v);
        sym_basis_rec(i + 1, N, rem - v, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail_rep

/// Symmetric power S^k(C^N) with a uniform rational shift of the weight:
/// highest weight (k + a, a, ..., a). Basis: monomials x^alpha, |alpha| = k,
/// descending lexicographic so x_1^k (the highest weight vector) is first;
/// E_ij acts as x_i d/dx_j (+ a d_ij). Covers the trivial rep (k = 0), the
/// defining rep (k = 1), and all dominant gl(2) weights.
inline GlnIrrep irrep_sym(int N, int k, const Rat& shift = Rat(0)) {
    if (N < 1 || k < 0) throw std::invalid_argument("irrep_sym: need N >= 1, k >= 0");
    std::vector<std::vector<int>> basis;
    {
        std::vector<int> cur;
        detail_rep::sym_basis_rec(0, N, k, cur, basis);
    }
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    GlnIrrep rep;
    rep.N = N;
    rep.dim = basis.size();
    rep.weight.assign(static_cast<std::size_t>(N), shift);
    rep.weight[0] += Rat(k);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Matrix<Rat> M(rep.dim, rep.dim);
            for (std::size_t col = 0; col < basis.size(); ++col) {
                const auto& alpha = basis[col];
                if (i == j) {
                    M(col, col) = Rat(alpha[static_cast<std::size_t>(i - 1)]) + shift;
                } else if (alpha[static_cast<std::size_t>(j - 1)] > 0) {
                    std::vector<int> beta = alpha;
                    beta[static_cast<std::size_t>(j - 1)] -= 1;
                    beta[static_cast<std::size_t>(i - 1)] += 1;
                    M(index.at(beta), col) = Rat(alpha[static_cast<std::size_t>(j - 1)]);
                }
            }
            rep.action[{i, j}] = std::move(M);
        }
    return rep;
}

/// Builds a gl(N) irrep from a dominant weight, up to a uniform rational
/// shift. General N supports (k + a, a, ..., a); for N = 2 every dominant
/// weight is of that form.
inline GlnIrrep build_irrep(int N, const std::vector<Rat>& weight) {
    if (static_cast<int>(weight.size()) != N) throw std::invalid_argument("build_irrep: weight size != N");
    const Rat shift = weight.back();
    Rat k = weight.front() - shift;
    for (std::size_t i = 1; i < weight.size(); ++i)
        if (weight[i] != shift)
            throw std::invalid_argument("build_irrep: only weights (k+a, a, ..., a) are constructible");
    if (k.get_den() != 1 || sgn(k) < 0)
        throw std::invalid_argument("build_irrep: sl-part of the weight must be a nonnegative integer");
    return irrep_sym(N, static_cast<int>(k.get_num().get_si()), shift);
}

/// Verifies [E_ij, E_kl] = d_jk E_il - d_li E_kj and the highest-weight
/// property of index 0. Throws on failure.
inline void irrep_validate(const GlnIrrep& rep) {
    const int N = rep.N;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    Matrix<Rat> C = rep.E(i, j) * rep.E(k, l) - rep.E(k, l) * rep.E(i, j);
                    Matrix<Rat> want(rep.dim, rep.dim);
                    if (j == k) want = want + rep.E(i, l);
                    if (l == i) want = want - rep.E(k, j);
                    if (!(C == want)) throw std::logic_error("irrep_validate: commutator failure");
                }
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (std::size_t r = 0; r < rep.dim; ++r)
                if (!is_zero(rep.E(i, j)(r, 0))) throw std::logic_error("irrep_validate: hw vector not annihilated");
}

/// A finite-dimensional Yangian module presented through its mode matrices.
/// Always arises as a tensor product of evaluation representations, which
/// keeps the support property T_r = 0 for r > n exactly true (spectral
/// shifts are realized as gl(1) weight shifts, not shift automorphisms).
struct YangianRep {
    int N = 1;
    int n_factors = 0;
    std::size_t dim = 1;
    std::vector<GlnIrrep> factors;
    std::map<std::tuple<int, int, int>, Matrix<Rat>> modes;  // (i, j, r), 1 <= r <= n

    Matrix<Rat> T(int i, int j, int r) const {
        if (r == 0) {
            Matrix<Rat> m(dim, dim);
            if (i == j)
                for (std::size_t t = 0; t < dim; ++t) m(t, t) = Rat(1);
            return m;
        }
        if (r < 0 || r > n_factors) return Matrix<Rat>(dim, dim);
        return modes.at({i, j, r});
    }
};

/// Tensor product of evaluation representations:
///   T^{ij}_r = sum over r-subsets S of factors and index chains i -> j of
///   the embedded product of factor actions (identity elsewhere).
inline YangianRep tensor_reps(const std::vector<GlnIrrep>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_reps: need at least one factor");
    YangianRep rep;
    rep.N = factors[0].N;
    for (const auto& f : factors)
        if (f.N != rep.N) throw std::invalid_argument("tensor_reps: mixed gl(N) ranks");
    rep.n_factors = static_cast<int>(factors.size());
    rep.factors = factors;
    rep.dim = 1;
    for (const auto& f : factors) rep.dim *= f.dim;
    const int n = rep.n_factors, N = rep.N;
    auto embed = [&](const std::vector<const Matrix<Rat>*>& mats) {
        Matrix<Rat> out;
        bool first = true;
        for (int t = 0; t < n; ++t) {
            Matrix<Rat> cur;
            if (mats[static_cast<std::size_t>(t)]) {
                cur = *mats[static_cast<std::size_t>(t)];
            } else {
                cur = Matrix<Rat>::identity(factors[static_cast<std::size_t>(t)].dim, Rat(1), Rat(0));
            }
            out = first ? cur : kron(out, cur);
            first = false;
        }
        return out;
    };
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int r = 1; r <= n; ++r) {
                Matrix<Rat> acc(rep.dim, rep.dim);
                // iterate r-subsets of {0..n-1}
                std::vector<int> subset(static_cast<std::size_t>(r));
                std::function<void(int, int)> pick = [&](int start, int depth) {
                    if (depth == r) {
                        // chains i = k_0 -> k_1 -> ... -> k_r = j
                        std::vector<int> ks(static_cast<std::size_t>(r) + 1);
                        ks.front() = i;
                        ks.back() = j;
                        std::function<void(int)> chain = [&](int pos) {
                            if (pos == r) {
                                std::vector<const Matrix<Rat>*> mats(static_cast<std::size_t>(n), nullptr);
                                for (int t = 0; t < r; ++t)
                                    mats[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])] =
                                        &factors[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])]
                                             .E(ks[static_cast<std::size_t>(t)], ks[static_cast<std::size_t>(t) + 1]);
                                acc = acc + embed(mats);
                                return;
                            }
                            for (int v = 1; v <= N; ++v) {
                                ks[static_cast<std::size_t>(pos)] = v;
                                chain(pos + 1);
                            }
                        };
                        chain(1);
                        return;
                    }
                    for (int s = start; s < n; ++s) {
                        subset[static_cast<std::size_t>(depth)] = s;
                        pick(s + 1, depth + 1);
                    }
                };
                pick(0, 0);
                rep.modes[{i, j, r}] = std::move(acc);
            }
    return rep;
}

inline YangianRep evaluation_rep(const GlnIrrep& pi) { return tensor_reps({pi}); }

/// True iff T^{ij}_r = 0 for all r > p, i.e. the module descends to
/// W_p(N) = Y_p(N). For tensor products this is the support property r <= n.
inline bool truncation_support(const YangianRep& rep, int p) { return rep.n_factors <= p; }

/// RTT verification with cleared denominators: with x = 1/u, y = 1/v and
/// T^{ij}(x) = sum_r x^r T_r, the RTT relation is equivalent to the
/// bivariate matrix-polynomial identity
///   (y - x) [T^{ij}(x), T^{kl}(y)] = x y (T^{kj}(x) T^{il}(y) - T^{kj}(y) T^{il}(x)).
struct RttReport {
    bool pass = true;
    std::string first_failure;
};

inline RttReport rtt_check(const YangianRep& rep) {
    RttReport report;
    const int N = rep.N, n = rep.n_factors;
    const std::size_t D = rep.dim;
    using BiPolyMat = std::map<std::pair<int, int>, Matrix<Rat>>;
    auto addto = [&](BiPolyMat& P, int dx, int dy, const Matrix<Rat>& M, int sign) {
        auto it = P.find({dx, dy});
        if (it == P.end())
            P[{dx, dy}] = (sign > 0) ? M : (M * Rat(-1));
        else
            it->second = (sign > 0) ? (it->second + M) : (it->second - M);
    };
    auto iszero = [&](const BiPolyMat& P) {
        for (const auto& [k, M] : P)
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j)
                    if (!is_zero(M(i, j))) return false;
        return true;
    };
    for (int i = 1; i <= N && report.pass; ++i)
        for (int j = 1; j <= N && report.pass; ++j)
            for (int k = 1; k <= N && report.pass; ++k)
                for (int l = 1; l <= N && report.pass; ++l) {
                    BiPolyMat lhs, rhs;
                    for (int rx = 0; rx <= n; ++rx)
                        for (int ry = 0; ry <= n; ++ry) {
                            // commutator [T^{ij}(x), T^{kl}(y)] term
                            Matrix<Rat> comm =
                                rep.T(i, j, rx) * rep.T(k, l, ry) - rep.T(k, l, ry) * rep.T(i, j, rx);
                            addto(lhs, rx, ry + 1, comm, +1);  // * y
                            addto(lhs, rx + 1, ry, comm, -1);  // - * x
                            // rhs * x y
                            addto(rhs, rx + 1, ry + 1, rep.T(k, j, rx) * rep.T(i, l, ry), +1);
                            addto(rhs, rx + 1, ry + 1, rep.T(k, j, ry) * rep.T(i, l, rx), -1);
                        }
                    for (const auto& [key, M] : rhs) addto(lhs, key.first, key.second, M, -1);
                    if (!iszero(lhs)) {
                        report.pass = false;
                        report.first_failure = "entry (i,j,k,l) = (" + std::to_string(i) + "," +
                                               std::to_string(j) + "," + std::to_string(k) + "," +
                                               std::to_string(l) + ")";
                    }
                }
    return report;
}

/// Highest-weight series lambda^i(u) = 1 + sum_r lambda^i_(r) u^{-r}, read
/// off the joint highest-weight vector (index 0). Throws if that vector is
/// not a joint eigenvector or is not annihilated by the upper entries.
inline std::vector<std::vector<Rat>> highest_weight(const YangianRep& rep) {
    const int N = rep.N, n = rep.n_factors;
    std::vector<std::vector<Rat>> lam(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) {
        auto& series = lam[static_cast<std::size_t>(i - 1)];
        series.assign(static_cast<std::size_t>(n) + 1, Rat(0));
        series[0] = Rat(1);
        for (int r = 1; r <= n; ++r) {
            const Matrix<Rat>& M = rep.T(i, i, r);
            for (std::size_t row = 1; row < rep.dim; ++row)
                if (!is_zero(M(row, 0)))
                    throw std::logic_error("highest_weight: hw vector not an eigenvector of t^{ii}(u)");
            series[static_cast<std::size_t>(r)] = M(0, 0);
        }
    }
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int r = 1; r <= n; ++r) {
                const Matrix<Rat>& M = rep.T(i, j, r);
                for (std::size_t row = 0; row < rep.dim; ++row)
                    if (!is_zero(M(row, 0)))
                        throw std::logic_error("highest_weight: hw vector not annihilated by t^{ij}(u), i<j");
            }
    return lam;
}

/// Drinfeld data: the monic polynomials P_i (coefficients low -> high) and
/// the center series rho(u) = 1 + sum d_n u^{-n}.
struct DrinfeldData {
    std::vector<std::vector<Rat>> P;  // N-1 monic polynomials
    std::vector<Rat> rho;             // rho coefficients, rho[0] = 1
};

namespace detail_rep {
inline std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}
inline std::vector<Rat> poly_shift_arg(const std::vector<Rat>& c) {
    // coefficients of c(u+1) from c(u)
    std::vector<Rat> out(c.size(), Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t t = 0; t <= k; ++t) out[t] += c[k] * binomial(static_cast<long>(k), static_cast<long>(t));
    return out;
}
}  // namespace detail_rep

/// Minimal-degree monic P_i with lambda^i(u) / lambda^{i+1}(u) = P_i(u+1)/P_i(u),
/// solved by bounded brute force over the degree (exact linear system per
/// candidate degree). Throws when no solution exists below the bound — the
/// "not finite-dim-classifiable" case.
inline std::vector<std::vector<Rat>> drinfeld_polynomials(const std::vector<std::vector<Rat>>& lam,
                                                          int max_degree = 16) {
    const int N = static_cast<int>(lam.size());
    const std::size_t n = lam[0].size() - 1;
    std::vector<std::vector<Rat>> Ps;
    for (int i = 0; i + 1 < N; ++i) {
        // A(u) = u^n lambda^i(u), B(u) = u^n lambda^{i+1}(u), low -> high
        std::vector<Rat> A(lam[static_cast<std::size_t>(i)].rbegin(), lam[static_cast<std::size_t>(i)].rend());
        std::vector<Rat> B(lam[static_cast<std::size_t>(i) + 1].rbegin(), lam[static_cast<std::size_t>(i) + 1].rend());
        std::optional<std::vector<Rat>> found;
        for (int d = 0; d <= max_degree && !found; ++d) {
            // unknown p_0..p_{d-1}, monic p_d = 1; equations: P(u+1) B(u) - A(u) P(u) = 0
            LinearSystem<std::size_t> sys(static_cast<std::size_t>(d));
            const std::size_t coeff_len = static_cast<std::size_t>(d) + std::max(A.size(), B.size()) + 1;
            for (int pi = 0; pi <= d; ++pi) {
                std::vector<Rat> base(static_cast<std::size_t>(d) + 1, Rat(0));
                base[static_cast<std::size_t>(pi)] = Rat(1);
                auto t1 = detail_rep::poly_mul(detail_rep::poly_shift_arg(base), B);
                auto t2 = detail_rep::poly_mul(A, base);
                for (std::size_t t = 0; t < coeff_len; ++t) {
                    Rat v = (t < t1.size() ? t1[t] : Rat(0)) - (t < t2.size() ? t2[t] : Rat(0));
                    if (is_zero(v)) continue;
                    if (pi == d)
                        sys.add_rhs(t, -v);
                    else
                        sys.add(t, static_cast<std::size_t>(pi), v);
                }
            }
            if (auto x = sys.solve()) {
                // verify (solve() ignores redundant rows consistently, but be safe)
                std::vector<Rat> P(*x);
                P.push_back(Rat(1));
                auto lhsP = detail_rep::poly_mul(detail_rep::poly_shift_arg(P), B);
                auto rhsP = detail_rep::poly_mul(A, P);
                bool ok = true;
                for (std::size_t t = 0; t < std::max(lhsP.size(), rhsP.size()); ++t) {
                    Rat l = t < lhsP.size() ? lhsP[t] : Rat(0);
                    Rat r = t < rhsP.size() ? rhsP[t] : Rat(0);
                    if (l != r) ok = false;
                }
                if (ok) found = P;
            }
        }
        if (!found)
            throw std::domain_error("drinfeld_polynomials: ratio not of the required form (not finite-dim-classifiable)");
        Ps.push_back(*found);
    }
    return Ps;
}

/// Classification decision for Drinfeld data against the truncation bound
/// sum deg P_i <= p, with the realizing evaluation-factor plan.
struct ClassifyResult {
    bool accepted = false;
    int total_degree = 0;
    std::string reason;
    /// Factor plan entries: fundamental index i (1..N-1), root gamma, and
    /// the realizing gl(N) weight Lambda_i - gamma (1,...,1).
    struct Factor {
        int fundamental;
        Rat root;
        std::vector<Rat> weight;
    };
    std::vector<Factor> factors;
    bool roots_rational = true;
};

namespace detail_rep {
/// Rational roots of a monic polynomial with rational coefficients (with
/// multiplicity); leftover indicates a nonrational factor.
inline std::pair<std::vector<Rat>, bool> rational_roots(std::vector<Rat> P) {
    std::vector<Rat> roots;
    auto deg = [&]() { return P.size() - 1; };
    while (deg() >= 1) {
        // scale to integer polynomial
        mpz_class lcm = 1;
        for (const auto& c : P) lcm = lcm * c.get_den() / gcd(lcm, mpz_class(c.get_den()));
        std::vector<mpz_class> ip;
        for (const auto& c : P) ip.push_back(c.get_num() * (lcm / c.get_den()));
        // candidate roots p/q, p | ip[0], q | ip[deg]
        bool found = false;
        if (ip[0] == 0) {
            roots.push_back(Rat(0));
            P.erase(P.begin());
            found = true;
        } else {
            std::vector<mpz_class> ps, qs;
            for (mpz_class d = 1; d * d <= abs(ip[0]); ++d)
                if (abs(ip[0]) % d == 0) {
                    ps.push_back(d);
                    ps.push_back(abs(ip[0]) / d);
                }
            mpz_class lead = ip.back();
            for (mpz_class d = 1; d * d <= abs(lead); ++d)
                if (abs(lead) % d == 0) {
                    qs.push_back(d);
                    qs.push_back(abs(lead) / d);
                }
            for (const auto& pp : ps) {
                for (const auto& qq : qs) {
                    for (int sign : {1, -1}) {
                        Rat cand(pp * sign, qq);
                        cand.canonicalize();
                        Rat val(0), pw(1);
                        for (const auto& c : P) {
                            val += c * pw;
                            pw *= cand;
                        }
                        if (is_zero(val)) {
                            roots.push_back(cand);
                            // synthetic division
                            std::vector<Rat> Q(P.size() - 1, Rat(0));
                            Rat carry = P.back();
                            for (std::size_t t = P.size() - 1; t-- > 0;) {
                                Q[t] = carry;
                                carry = P[t] + carry * cand;
                            }
                            P = Q;
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        if (!found) return {roots, false};
    }
    return {roots, true};
}
}  // namespace detail_rep

inline ClassifyResult classify(const DrinfeldData& data, int N, int p) {
    ClassifyResult res;
    int total = 0;
    for (const auto& P : data.P) {
        if (P.empty() || P.back() != Rat(1)) {
            res.reason = "P_i not monic";
            return res;
        }
        total += static_cast<int>(P.size()) - 1;
    }
    res.total_degree = total;
    if (static_cast<int>(data.P.size()) != N - 1) {
        res.reason = "expected " + std::to_string(N - 1) + " polynomials";
        return res;
    }
    if (total > p) {
        res.reason = "degree " + std::to_string(total) + " > p=" + std::to_string(p);
        return res;
    }
    res.accepted = true;
    for (std::size_t i = 0; i < data.P.size(); ++i) {
        auto [roots, all_rational] = detail_rep::rational_roots(data.P[i]);
        if (!all_rational) res.roots_rational = false;
        for (const auto& g : roots) {
            ClassifyResult::Factor f;
            f.fundamental = static_cast<int>(i) + 1;
            f.root = g;
            f.weight.assign(static_cast<std::size_t>(N), -g);
            for (std::size_t t = 0; t <= i; ++t) f.weight[t] += Rat(1);
            res.factors.push_back(std::move(f));
        }
    }
    return res;
}

/// q-det T(u) as an exact matrix of rational functions in u:
///   sum_sigma sgn(sigma) T_{sigma(1)1}(u) T_{sigma(2)2}(u-1) ... T_{sigma(N)N}(u-N+1).
/// Returns the scalar series rho(u) coefficients (d_0 = 1) up to `order`,
/// and verifies scalarity and centrality exactly.
struct QdetResult {
    std::vector<Rat> rho;       // 1 + d_1 u^{-1} + ...
    bool scalar = true;
    bool central = true;
};

inline QdetResult qdet(const YangianRep& rep, int order) {
    const int N = rep.N, n = rep.n_factors;
    const std::size_t D = rep.dim;
    // entry (i, j) of T(u - k) as a rational function in u: sum_r T_r / (u-k)^r,
    // common denominator (u-k)^n.
    auto entry = [&](int i, int j, int k) {
        Matrix<RationalFunction> E(D, D);
        Poly2 umk = Poly2::u() - Poly2::constant(Rat(k));
        std::vector<Poly2> pw(static_cast<std::size_t>(n) + 1, Poly2::constant(Rat(1)));
        for (int r = 1; r <= n; ++r) pw[static_cast<std::size_t>(r)] = pw[static_cast<std::size_t>(r) - 1] * umk;
        for (std::size_t a = 0; a < D; ++a)
            for (std::size_t b = 0; b < D; ++b) {
                Poly2 num;
                for (int r = 0; r <= n; ++r) {
                    Rat c = rep.T(i, j, r)(a, b);
                    if (!is_zero(c)) num = num + pw[static_cast<std::size_t>(n - r)] * c;
                }
                E(a, b) = RationalFunction(num, pw[static_cast<std::size_t>(n)]);
            }
        return E;
    };
    Matrix<RationalFunction> total(D, D);
    std::vector<int> perm(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    do {
        int sgn = 1;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sgn = -sgn;
        Matrix<RationalFunction> cur;
        bool first = true;
        for (int col = 1; col <= N; ++col) {
            auto E = entry(perm[static_cast<std::size_t>(col - 1)], col, col - 1);
            cur = first ? E : cur * E;
            first = false;
        }
        total = total + cur * RationalFunction::constant(Rat(sgn));
    } while (std::next_permutation(perm.begin(), perm.end()));

    QdetResult res;
    const RationalFunction& s = total(0, 0);
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) {
            const RationalFunction& e = total(a, b);
            if (a == b ? !(e == s) : !e.is_zero()) res.scalar = false;
        }
    // centrality: q-det commutes with every mode matrix
    for (int i = 1; i <= N && res.central; ++i)
        for (int j = 1; j <= N && res.central; ++j)
            for (int r = 1; r <= n && res.central; ++r) {
                auto Tm = rep.T(i, j, r).map([](const Rat& c) { return RationalFunction::constant(c); });
                if (!((total * Tm) == (Tm * total))) res.central = false;
            }
    // series expansion of s at u = infinity: substitute u = 1/z, expand in z.
    // s = num(u)/den(u); with L = deg den - deg num padding.
    {
        auto numu = s.num().by_u();
        auto denu = s.den().by_u();
        int dn = s.num().is_zero() ? 0 : s.num().deg_u();
        int dd = s.den().deg_u();
        std::vector<Rat> a(static_cast<std::size_t>(order) + 1, Rat(0));
        std::vector<Rat> b(static_cast<std::size_t>(order) + 1, Rat(0));
        for (int t = 0; t <= order; ++t) {
            if (dn - t >= 0 && numu.count(dn - t)) a[static_cast<std::size_t>(t)] = numu[dn - t].terms().begin()->second;
            if (dd - t >= 0 && denu.count(dd - t)) b[static_cast<std::size_t>(t)] = denu[dd - t].terms().begin()->second;
        }
        // series c with a = b * c (b[0] != 0), then shift by z^{dd-dn}
        std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
        for (int t = 0; t <= order; ++t) {
            Rat acc = a[static_cast<std::size_t>(t)];
            for (int s2 = 1; s2 <= t; ++s2) acc -= b[static_cast<std::size_t>(s2)] * c[static_cast<std::size_t>(t - s2)];
            c[static_cast<std::size_t>(t)] = acc / b[0];
        }
        res.rho.assign(static_cast<std::size_t>(order) + 1, Rat(0));
        const int shift = dd - dn;
        for (int t = 0; t <= order; ++t)
            if (t + shift <= order && t + shift >= 0) res.rho[static_cast<std::size_t>(t + shift)] = c[static_cast<std::size_t>(t)];
    }
    return res;
}

/// Truncated coproduct on two module legs:
///   Delta_p(T^{ij}_m) = sum_k sum_{r <= p, m-r <= p} T^{ik}_r (x) T^{kj}_{m-r}.
inline Matrix<Rat> coproduct_p(const YangianRep& L1, const YangianRep& L2, int i, int j, int m, int p) {
    const int N = L1.N;
    Matrix<Rat> acc(L1.dim * L2.dim, L1.dim * L2.dim);
    for (int r = 0; r <= m; ++r) {
        if (r > p || m - r > p) continue;
        for (int k = 1; k <= N; ++k) acc = acc + kron(L1.T(i, k, r), L2.T(k, j, m - r));
    }
    return acc;
}

/// Coproduct defect of the truncation:
///   Delta_p([T^{ij}_p, T^{kl}_2]) - [Delta_p(T^{ij}_p), Delta_p(T^{kl}_2)]
/// evaluated on two legs. The commutator argument is the Y_p element: the
/// comTT right-hand side with its mode-(p+1) letters already zero in the
/// quotient, so only the quadratic terms survive before Delta_p applies.
/// The defect equals the dropped middle terms of Delta(T_{p+1}),
///   -d^{kj} sum_{r=1}^{p} T^{ia}_r (x) T^{al}_{p+1-r}
///   +d^{il} sum_{r=1}^{p} T^{ka}_r (x) T^{aj}_{p+1-r},
/// identically zero whenever the legs do not support mode >= 2 (single
/// evaluation legs), and zero for the untruncated coproduct by the Hopf
/// property.
inline Matrix<Rat> coproduct_defect(const YangianRep& L1, const YangianRep& L2, int i, int j, int k, int l,
                                    int p, bool truncated = true) {
    const int thr = truncated ? p : 1 << 20;
    const std::size_t D = L1.dim * L2.dim;
    Matrix<Rat> side1(D, D);
    const int m = p, n = 2;
    for (int r = 0; r < std::min(m, n); ++r) {
        const int hi = m + n - 1 - r;
        if (truncated && hi > p) continue;  // letter vanishes in Y_p
        if (r == 0) {
            if (k == j) side1 = side1 + coproduct_p(L1, L2, i, l, hi, thr);
            if (i == l) side1 = side1 - coproduct_p(L1, L2, k, j, hi, thr);
        } else {
            side1 = side1 + coproduct_p(L1, L2, k, j, r, thr) * coproduct_p(L1, L2, i, l, hi, thr);
            side1 = side1 - coproduct_p(L1, L2, k, j, hi, thr) * coproduct_p(L1, L2, i, l, r, thr);
        }
    }
    Matrix<Rat> A = coproduct_p(L1, L2, i, j, m, thr);
    Matrix<Rat> B = coproduct_p(L1, L2, k, l, n, thr);
    return side1 - (A * B - B * A);
}

/// The middle-terms closed form of the defect (see coproduct_defect).
inline Matrix<Rat> coproduct_defect_closed_form(const YangianRep& L1, const YangianRep& L2, int i, int j,
                                                int k, int l, int p) {
    const int N = L1.N;
    Matrix<Rat> acc(L1.dim * L2.dim, L1.dim * L2.dim);
    for (int r = 1; r <= p; ++r)
        for (int a = 1; a <= N; ++a) {
            if (k == j) acc = acc - kron(L1.T(i, a, r), L2.T(a, l, p + 1 - r));
            if (i == l) acc = acc + kron(L1.T(k, a, r), L2.T(a, j, p + 1 - r));
        }
    return acc;
}

}  // namespace truncw

#endif
