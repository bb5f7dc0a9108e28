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

#ifndef QCIRCLE_CONSTANTS_HPP
#define QCIRCLE_CONSTANTS_HPP

namespace qcircle {

// Mathematical constants to 30 significant digits (decimal literals, no
// runtime dependence on platform libm for these values).
inline constexpr double kPi          = 3.14159265358979323846264338328;
inline constexpr double kTwoPi       = 6.28318530717958647692528676656;
inline constexpr double kEulerGamma  = 0.577215664901532860606512090082;
inline constexpr double kLn2         = 0.693147180559945309417232121458;
inline constexpr double kLnPi        = 1.14472988584940017414342735135;
inline constexpr double kHalfLn2Pi   = 0.918938533204672741780329736406;  // log(2*pi)/2
inline constexpr double kGlaisher    = 1.28242712910062263687534256887;   // Glaisher-Kinkelin A

}  // namespace qcircle

#endif  // QCIRCLE_CONSTANTS_HPP
