/*
   Copyright 2026 The ratsym Authors

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

/*
   Turning floating values back into exact cyclotomic numbers.

   Any answer produced here is only a guess; callers re-verify exactly before
   trusting it (squaring a square root, expanding a conjugation, ...).
*/

#ifndef RATSYM_RECOGNIZE_HPP
#define RATSYM_RECOGNIZE_HPP

#include <algorithm>
#include <cmath>
#include <vector>
#include <numbers>
#include <optional>

#include "cyclotomic.hpp"

namespace ratsym {

/// Best rational approximation with denominator <= max_den (continued fractions);
/// nullopt when it misses x by more than tol.
inline std::optional<Rational> rational_approx(double x, long max_den = 1000000, double tol = 1e-9) {
    if (!std::isfinite(x)) return std::nullopt;
    const bool neg = x < 0;
    double y = std::abs(x);
    // convergents h/k
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double frac = y;
    Rational best;
    bool have = false;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(frac);
        if (a > 1e12) break;
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        best = Rational(h1, k1);
        have = true;
        if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - y) <= tol * std::max(1.0, y)) break;
        const double r = frac - a;
        if (r < 1e-15) break;
        frac = 1.0 / r;
    }
    if (!have) return std::nullopt;
    best.canonicalize();
    if (std::abs(best.get_d() - y) > tol * std::max(1.0, y)) return std::nullopt;
    return neg ? Rational(-best) : best;
}

/// Recognize x in Q(zeta_m) as 0, q*zeta^k, or a*zeta^j + b*zeta^k with rational q, a, b.
/// Small denominators are tried first since a large bound fits almost any real number.
inline std::optional<CycloNum> recognize_cyclotomic(Complex x, int m, double tol = 1e-9, long max_den = 1000000) {
    const double ax = std::abs(x);
    const double scale = std::max(1.0, ax);
    if (ax <= tol) return CycloNum::zero(m);
    auto zeta = [m](int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / m); };

    for (long den : {24L, 1000L, max_den}) {
        if (den > max_den) continue;
        // q * zeta^k (q > 0)
        const double turns = std::arg(x) * m / (2.0 * std::numbers::pi);
        const int k0 = static_cast<int>(std::lround(turns));
        if (std::abs(x - ax * zeta(k0)) <= tol * scale) {
            if (auto q = rational_approx(ax, den, tol)) return CycloNum::root_of_unity(m, k0) * CycloNum(m, *q);
        }
        // a * zeta^j + b * zeta^k, 0 <= j < k < m, with zeta^j, zeta^k independent over R
        for (int j = 0; j < m; ++j) {
            const Complex u = zeta(j);
            for (int k = j + 1; k < m; ++k) {
                const Complex v = zeta(k);
                const double det = u.real() * v.imag() - u.imag() * v.real();
                if (std::abs(det) < 1e-6) continue;
                const double a = (x.real() * v.imag() - x.imag() * v.real()) / det;
                const double b = (u.real() * x.imag() - u.imag() * x.real()) / det;
                const auto qa = rational_approx(a, den, tol);
                if (!qa) continue;
                const auto qb = rational_approx(b, den, tol);
                if (!qb) continue;
                return CycloNum::root_of_unity(m, j) * CycloNum(m, *qa) +
                       CycloNum::root_of_unity(m, k) * CycloNum(m, *qb);
            }
        }
    }
    return std::nullopt;
}

namespace detail {

/// LLL reduction (delta = 3/4) of the rows of b; rows stay integer combinations of the input.
inline void lll_reduce(std::vector<std::vector<long double>>& b) {
    const size_t n = b.size();
    auto dot = [](const std::vector<long double>& x, const std::vector<long double>& y) {
        long double s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    std::vector<std::vector<long double>> star(n), mu(n, std::vector<long double>(n, 0));
    std::vector<long double> norm(n);
    auto gram_schmidt = [&] {
        for (size_t i = 0; i < n; ++i) {
            star[i] = b[i];
            for (size_t j = 0; j < i; ++j) {
                mu[i][j] = norm[j] > 0 ? dot(b[i], star[j]) / norm[j] : 0;
                for (size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
            }
            norm[i] = dot(star[i], star[i]);
        }
    };
    gram_schmidt();
    size_t k = 1;
    for (int guard = 0; k < n && guard < 20000; ++guard) {
        for (size_t j = k; j-- > 0;) {
            const long double q = std::round(mu[k][j]);
            if (q == 0) continue;
            for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
            gram_schmidt();
        }
        if (norm[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<size_t>(k - 1, 1);
        }
    }
}

}  // namespace detail

/// Recognize x in Q(zeta_m) through an integer relation D x = sum_j c_j zeta^j found by LLL.
/// Handles entries that need the whole power basis; limited to small fields.
inline std::optional<CycloNum> recognize_by_lattice(Complex x, int m, double tol = 1e-9, long max_height = 1000000) {
    const int phi = totient(m);
    if (phi > 12) return std::nullopt;
    const double scale = std::max(1.0, std::abs(x));
    if (std::abs(x) <= tol) return CycloNum::zero(m);
    std::vector<Complex> v{x};
    for (int j = 0; j < phi; ++j) v.push_back(-std::polar(1.0, 2.0 * std::numbers::pi * j / m));
    const size_t n = v.size();
    for (long double K : {1e9L, 1e11L, 1e7L}) {
        std::vector<std::vector<long double>> b(n, std::vector<long double>(n + 2, 0));
        for (size_t i = 0; i < n; ++i) {
            b[i][i] = 1;
            b[i][n] = K * v[i].real();
            b[i][n + 1] = K * v[i].imag();
        }
        detail::lll_reduce(b);
        for (const auto& row : b) {
            const long double D = row[0];
            if (D == 0 || std::abs(D) > max_height) continue;
            std::vector<Rational> coords;
            Complex approx = 0;
            bool small = true;
            for (int j = 0; j < phi && small; ++j) {
                const long double c = row[static_cast<size_t>(j) + 1];
                if (std::abs(c) > max_height) small = false;
                coords.emplace_back(static_cast<long>(c), static_cast<long>(std::abs(D)));
                if (D < 0) coords.back() = -coords.back();
                coords.back().canonicalize();
                approx += static_cast<double>(c / D) * std::polar(1.0, 2.0 * std::numbers::pi * j / m);
            }
            if (!small || std::abs(approx - x) > tol * scale) continue;
            return CycloNum::from_coords(m, coords);
        }
    }
    return std::nullopt;
}

}  // namespace ratsym

#endif  // RATSYM_RECOGNIZE_HPP
