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

#ifndef RATSYM_ROOTS_HPP
#define RATSYM_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "polynomial.hpp"

namespace ratsym {

struct RootCluster {
    Complex value;
    int multiplicity = 1;
    double residual = 0.0;  // |p(z)| / sum |a_k||z|^k on the square-free factor
};

namespace detail {

/// Backward-error residual |p(z)| / sum_k |a_k| |z|^k.
inline double relative_residual(const std::vector<Complex>& a, Complex z) {
    Complex v = 0;
    double s = 0;
    const double az = std::abs(z);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        v = v * z + *it;
        s = s * az + std::abs(*it);
    }
    return s == 0 ? 0 : std::abs(v) / s;
}

inline void eval_with_derivative(const std::vector<Complex>& a, Complex z, Complex& p, Complex& dp) {
    p = 0;
    dp = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
}

/// Aberth-Ehrlich simultaneous iteration for a polynomial with (numerically) simple roots.
inline std::vector<Complex> aberth(std::vector<Complex> a, double tol, int max_iter, std::uint64_t seed) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<Complex> z;
    if (n < 1) return z;
    const Complex lead = a.back();
    for (auto& v : a) v /= lead;
    if (n == 1) return {-a[0]};

    // Start on a circle whose radius matches the geometric mean of the root moduli.
    double radius = std::pow(std::max(std::abs(a[0]), 1e-300), 1.0 / n);
    if (!(radius > 1e-12) || !std::isfinite(radius)) radius = 1.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    z.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<size_t>(k)] =
            std::polar(radius * (1.0 + jitter(rng)), 2.0 * std::numbers::pi * k / n + 0.4 + jitter(rng));

    std::vector<bool> done(static_cast<size_t>(n), false);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int k = 0; k < n; ++k) {
            auto K = static_cast<size_t>(k);
            if (done[K]) continue;
            Complex p, dp;
            eval_with_derivative(a, z[K], p, dp);
            if (p == Complex(0)) {
                done[K] = true;
                continue;
            }
            Complex ratio = p / dp;
            Complex sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[K] - z[static_cast<size_t>(j)]);
            Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[K] -= w;
            if (std::abs(w) <= tol * (1.0 + std::abs(z[K]))) done[K] = true;
            else all = false;
        }
        if (all) break;
    }
    // Newton polish
    for (auto& r : z) {
        for (int s = 0; s < 3; ++s) {
            Complex p, dp;
            eval_with_derivative(a, r, p, dp);
            if (dp == Complex(0)) break;
            Complex step = p / dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            r -= step;
        }
    }
    return z;
}

}  // namespace detail

/// Numeric roots of a complex polynomial assumed square-free; all roots must meet `tol`.
inline std::vector<Complex> simple_roots_numeric(const CPoly& p, double tol = 1e-12, std::uint64_t seed = 0x5eed) {
    if (p.degree() < 1) throw Error(Errc::InvalidArgument, "root finding needs degree >= 1");
    // deflate exact roots at 0: the relative residual cannot certify them
    size_t zeros = 0;
    while (zeros < p.coeffs().size() && p.coeffs()[zeros] == Complex(0)) ++zeros;
    if (zeros > 0) {
        std::vector<Complex> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end());
        std::vector<Complex> z(zeros, Complex(0));
        if (rest.size() > 1) {
            const auto more = simple_roots_numeric(CPoly(rest, Complex(0)), tol, seed);
            z.insert(z.end(), more.begin(), more.end());
        }
        return z;
    }
    const auto& a = p.coeffs();
    auto z = detail::aberth(a, 1e-15, 800, seed);
    double worst = 0;
    for (const auto& r : z) worst = std::max(worst, detail::relative_residual(a, r));
    if (worst > tol) {
        // one more attempt from a different start before giving up
        auto z2 = detail::aberth(a, 1e-15, 4000, seed ^ 0x9e3779b97f4a7c15ULL);
        double worst2 = 0;
        for (const auto& r : z2) worst2 = std::max(worst2, detail::relative_residual(a, r));
        if (worst2 > tol)
            throw Error(Errc::ConvergenceFailure, "root residual " + std::to_string(std::min(worst, worst2)) +
                                                      " exceeds tolerance " + std::to_string(tol));
        z = std::move(z2);
    }
    return z;
}

/// All complex roots of an exact polynomial with multiplicities.
///
/// Multiplicities come from the exact square-free decomposition, so each numeric
/// solve only ever sees simple roots. The result is sorted by (real, imag).
inline std::vector<RootCluster> roots_numeric(const Poly& p, double tol = 1e-12) {
    if (p.degree() < 1) throw Error(Errc::InvalidArgument, "roots_numeric needs degree >= 1");
    std::vector<RootCluster> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        const CPoly cf = to_complex(factor);
        for (const auto& r : simple_roots_numeric(cf, tol))
            out.push_back({r, mult, detail::relative_residual(cf.coeffs(), r)});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& x, const RootCluster& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

}  // namespace ratsym

#endif  // RATSYM_ROOTS_HPP
