/*
   Copyright 2026 The qcircle authors

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

#ifndef QCIRCLE_SPECFUN_HPP
#define QCIRCLE_SPECFUN_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qcircle/constants.hpp"
#include "qcircle/logmag.hpp"

namespace qcircle {

namespace detail {

// B_{2j}/(2j)! for j = 1..12 (Maclaurin summation coefficients)
inline constexpr double kBern2jOverFact[13] = {
    0.0,  // unused
    8.3333333333333333333333333333e-02,
    -1.3888888888888888888888888889e-03,
    3.3068783068783068783068783069e-05,
    -8.2671957671957671957671957672e-07,
    2.0876756987868098979210090321e-08,
    -5.2841901386874931848476822022e-10,
    1.3382536530684678832826980975e-11,
    -3.3896802963225828668301953912e-13,
    8.5860620562778445641359054504e-15,
    -2.1748686985580618730415164239e-16,
    5.5090028283602295152026526089e-18,
    -1.3954464685812523340707686264e-19,
};

// B_{2k} for the digamma / log-gamma asymptotic tails
inline constexpr double kBern2k[10] = {
    0.0,  // unused
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
};

inline constexpr int kEmBernoulliTerms = 12;
inline constexpr double kEmShiftTarget = 15.0;

// Euler-Maclaurin evaluation of zeta(s, alpha) together with its
// s-derivative, both accumulated through the same shifted expansion.
// Valid for s != 1, 0 < alpha <= 1.
inline std::pair<double, double> hurwitz_zeta_em(double s, double alpha) {
    int m = static_cast<int>(std::ceil(kEmShiftTarget - alpha));
    double big_a = alpha + m;
    double log_a = std::log(big_a);

    double val = 0.0, der = 0.0;
    for (int j = 0; j < m; ++j) {
        double base = alpha + j;
        double p = std::pow(base, -s);
        val += p;
        der -= std::log(base) * p;
    }

    double a_pow_ms = std::pow(big_a, -s);  // A^{-s}

    // A^{1-s}/(s-1)
    double t1 = a_pow_ms * big_a / (s - 1.0);
    val += t1;
    der += -log_a * t1 - a_pow_ms * big_a / ((s - 1.0) * (s - 1.0));

    // A^{-s}/2
    val += 0.5 * a_pow_ms;
    der += -0.5 * log_a * a_pow_ms;

    // Bernoulli tail: sum_r B_{2r}/(2r)! * s(s+1)...(s+2r-2) * A^{-s-2r+1}.
    // The rising product and its s-derivative are extended incrementally so
    // that zero factors (integer s <= 0) are handled exactly.
    double prod = 1.0, dprod = 0.0;
    int factors = 0;
    double a_pow = a_pow_ms / big_a;  // A^{-s-2r+1} at r = 1
    for (int r = 1; r <= kEmBernoulliTerms; ++r) {
        while (factors < 2 * r - 1) {
            double f = s + factors;
            dprod = dprod * f + prod;
            prod *= f;
            ++factors;
        }
        double c = kBern2jOverFact[r];
        val += c * prod * a_pow;
        der += c * (dprod - prod * log_a) * a_pow;
        a_pow /= big_a * big_a;
    }
    return {val, der};
}

}  // namespace detail

/// Hurwitz zeta zeta(s, alpha) = sum_{n>=0} (n+alpha)^{-s}, continued to
/// s != 1.  Accuracy ~1e-13 absolute on the moderate-s range used here;
/// the shifted Euler-Maclaurin form loses ground for large negative
/// non-integer s, where the shifted terms grow like (alpha+15)^{-s}.
inline double hurwitz_zeta(double s, double alpha) {
    if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("hurwitz_zeta: alpha must be in (0, 1]");
    return detail::hurwitz_zeta_em(s, alpha).first;
}

/// d/ds zeta(s, alpha) at s = -1, the arithmetic ingredient of the
/// main-term imaginary parts.  zeta'(-1, 1) = 1/12 - log(Glaisher A).
inline double hurwitz_zeta_deriv_minus1(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("hurwitz_zeta_deriv_minus1: alpha must be in (0, 1]");
    return detail::hurwitz_zeta_em(-1.0, alpha).second;
}

/// Digamma psi(x) for x > 0: recurrence shift to x >= 15, then the
/// asymptotic series log x - 1/(2x) - sum B_{2k}/(2k x^{2k}).
inline double digamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("digamma: requires x > 0");
    double shift = 0.0;
    while (x < 15.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double tail = 0.0;
    double p = inv2;
    for (int k = 1; k <= 9; ++k) {
        tail += detail::kBern2k[k] / (2.0 * k) * p;
        p *= inv2;
    }
    return shift + std::log(x) - 0.5 * inv - tail;
}

/// log Gamma(x) for x > 0 via Stirling with recurrence shift to x >= 15.
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
    double shift = 0.0;
    while (x < 15.0) {
        shift -= std::log(x);
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double tail = 0.0;
    double p = inv;
    for (int k = 1; k <= 9; ++k) {
        tail += detail::kBern2k[k] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return shift + (x - 0.5) * std::log(x) - x + kHalfLn2Pi + tail;
}

namespace detail {

// log|Gamma(z)| with sign for real z that is not a pole; negative z goes
// through the reflection formula.
inline LogMagnitude gamma_log_signed(double z) {
    if (z > 0.0) return LogMagnitude::from_log(1, log_gamma(z));
    double fl = std::floor(z);
    if (z == fl) throw std::domain_error("gamma_log_signed: pole at non-positive integer");
    // sin(pi*z) via reduction of z to (0,1) so the sign is exact
    double frac = z - fl;  // in (0,1)
    double sin_abs = std::sin(kPi * frac);
    long long n = static_cast<long long>(fl);
    int sin_sign = (n % 2 == 0) ? 1 : -1;
    return LogMagnitude::from_log(sin_sign,
                                  kLnPi - std::log(sin_abs) - log_gamma(1.0 - z));
}

inline LogMagnitude bessel_i_series(double order, double x) {
    // I_v(x) = sum_k (x/2)^{v+2k} / (k! Gamma(v+k+1)); the term recurrence
    // t_{k+1} = t_k * (x^2/4)/((k+1)(v+k+1)) carries Gamma's sign through
    // the negative-argument factors.
    LogMagnitude t0lg = LogMagnitude::from_log(1, order * std::log(x / 2.0)) /
                        gamma_log_signed(order + 1.0);
    double term = t0lg.to_double() * t0lg.sign >= 0 ? t0lg.to_double() : t0lg.to_double();
    term = t0lg.to_double();
    double q = x * x / 4.0;
    double sum = term;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0) * (order + k + 1.0));
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-18 && k > 4) break;
    }
    return LogMagnitude::from_double(sum);
}

inline LogMagnitude bessel_i_asymptotic(double order, double x) {
    // I_v(x) ~ e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(v)/x^k with
    // a_k = prod_{j<=k} (4v^2-(2j-1)^2) / (8^k k!); 20 correction terms.
    double mu = 4.0 * order * order;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 20; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        sum += term;
    }
    return LogMagnitude::from_log(sum > 0 ? 1 : -1,
                                  x - 0.5 * std::log(kTwoPi * x) + std::log(std::fabs(sum)));
}

}  // namespace detail

/// Modified Bessel function of the first kind in log space.  Power series
/// for x < 30, asymptotic expansion for x >= 30; the seam agreement is
/// pinned by tests.  Handles arbitrary real order (I_{-n} = I_n for
/// integer order); the library itself uses orders -3/4 and -5/4.
inline LogMagnitude bessel_i_log(double order, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_i_log: requires x > 0");
    if (order < 0.0 && order == std::floor(order)) order = -order;
    if (x < 30.0) return detail::bessel_i_series(order, x);
    return detail::bessel_i_asymptotic(order, x);
}

}  // namespace qcircle

#endif  // QCIRCLE_SPECFUN_HPP
