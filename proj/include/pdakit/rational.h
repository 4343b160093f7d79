/*
Copyright 2026 The pdakit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PDAKIT_RATIONAL_H_
#define PDAKIT_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Throws kDegenerateInput on a zero denominator.
Rational MakeRational(const BigInt& num, const BigInt& den);

BigInt Numerator(const Rational& r);
BigInt Denominator(const Rational& r);

BigInt Floor(const Rational& r);
BigInt Ceil(const Rational& r);
bool IsIntegral(const Rational& r);

// ceil(num / den) for den > 0.
BigInt CeilDiv(const BigInt& num, const BigInt& den);

// C(n, k); zero when k < 0 or k > n.
BigInt Binomial(const BigInt& n, const BigInt& k);
BigInt Pow(const BigInt& base, unsigned exponent);

// Converts to a machine integer, throwing kParameterOutOfRange if it does not
// fit.
std::uint64_t ToU64(const BigInt& v);

double ToDouble(const Rational& r);

// "p/q", or "p" when the value is an integer.
std::string ToString(const Rational& r);

// Fixed-point rendering with `places` digits after the point, rounding half to
// even on the exact value.
std::string ToDecimal(const Rational& r, int places);

// Scientific rendering "d.ddddde-XX" whose mantissa carries
// `mantissa_places` fractional digits, rounded half to even.
struct Scientific {
  std::string mantissa;
  int exponent = 0;

  std::string str() const;
};
Scientific ToScientific(const Rational& r, int mantissa_places);

}  // namespace pdakit

#endif  // PDAKIT_RATIONAL_H_
