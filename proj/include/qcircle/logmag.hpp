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

#ifndef QCIRCLE_LOGMAG_HPP
#define QCIRCLE_LOGMAG_HPP

#include <cmath>
#include <stdexcept>

namespace qcircle {

/// Sign-and-log representation sign * exp(log_abs) for quantities far
/// outside binary64 range (coefficient asymptotics reach exp(1e7) and
/// beyond).  sign == 0 means exactly zero and log_abs is ignored.
struct LogMagnitude {
    int sign = 0;
    double log_abs = 0.0;

    static LogMagnitude zero() { return {}; }

    static LogMagnitude from_log(int sign, double log_abs) {
        if (sign == 0) return {};
        return {sign > 0 ? 1 : -1, log_abs};
    }

    static LogMagnitude from_double(double x) {
        if (x == 0.0) return {};
        return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
    }

    /// Overflows to +/-inf when log_abs exceeds ~709.
    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_abs);
    }

    bool is_zero() const { return sign == 0; }

    LogMagnitude abs() const { return {sign == 0 ? 0 : 1, log_abs}; }

    friend LogMagnitude operator-(const LogMagnitude& a) {
        return {-a.sign, a.log_abs};
    }

    friend LogMagnitude operator*(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }

    friend LogMagnitude operator/(const LogMagnitude& a, const LogMagnitude& b) {
        if (b.sign == 0) throw std::domain_error("LogMagnitude: division by zero");
        if (a.sign == 0) return {};
        return {a.sign * b.sign, a.log_abs - b.log_abs};
    }

    friend LogMagnitude operator+(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        // larger magnitude anchors the log-sum-exp
        const LogMagnitude& hi = (a.log_abs >= b.log_abs) ? a : b;
        const LogMagnitude& lo = (a.log_abs >= b.log_abs) ? b : a;
        double d = lo.log_abs - hi.log_abs;  // <= 0
        if (hi.sign == lo.sign)
            return {hi.sign, hi.log_abs + std::log1p(std::exp(d))};
        if (d == 0.0) return {};  // exact cancellation
        return {hi.sign, hi.log_abs + std::log1p(-std::exp(d))};
    }

    friend LogMagnitude operator-(const LogMagnitude& a, const LogMagnitude& b) {
        return a + (-b);
    }

    LogMagnitude& operator+=(const LogMagnitude& o) { return *this = *this + o; }
    LogMagnitude& operator-=(const LogMagnitude& o) { return *this = *this - o; }
    LogMagnitude& operator*=(const LogMagnitude& o) { return *this = *this * o; }

    friend bool operator==(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.sign != b.sign) return false;
        return a.sign == 0 || a.log_abs == b.log_abs;
    }

    // ordering of the represented real values
    friend bool operator<(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        return a.sign > 0 ? a.log_abs < b.log_abs : a.log_abs > b.log_abs;
    }
    friend bool operator>(const LogMagnitude& a, const LogMagnitude& b) { return b < a; }
    friend bool operator<=(const LogMagnitude& a, const LogMagnitude& b) { return !(b < a); }
    friend bool operator>=(const LogMagnitude& a, const LogMagnitude& b) { return !(a < b); }
};

}  // namespace qcircle

#endif  // QCIRCLE_LOGMAG_HPP
