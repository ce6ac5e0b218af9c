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

#ifndef TRUNCW_RATIONAL_HPP
#define TRUNCW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace truncw {

/// Exact arbitrary-precision rational scalar, the ground field of every
/// computation in this library. GMP keeps values canonical (gcd 1, positive
/// denominator) under arithmetic; direct construction goes through rat().
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "n" or "n/d". Used by the CLI and the JSON readers.
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// Canonical "num/den" form ("num" when den == 1); stable across runs.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(z);
}

/// Binomial coefficient with the usual convention C(n, k) = 0 for k < 0 or k > n.
inline Rat binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(z);
}

inline int parity_sign(long m) { return (m % 2 == 0) ? 1 : -1; }

}  // namespace truncw

#endif
