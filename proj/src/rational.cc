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

#include "pdakit/rational.h"

#include <cstdio>
#include <limits>
#include <string>

#include "pdakit/errors.h"

namespace pdakit {

Rational MakeRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::kDegenerateInput, "zero denominator");
  return Rational(num, den);
}

BigInt Numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

BigInt Denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

BigInt Floor(const Rational& r) {
  BigInt n = Numerator(r);
  BigInt d = Denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

BigInt Ceil(const Rational& r) {
  BigInt n = Numerator(r);
  BigInt d = Denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

bool IsIntegral(const Rational& r) { return Denominator(r) == 1; }

BigInt CeilDiv(const BigInt& num, const BigInt& den) {
  return Ceil(MakeRational(num, den));
}

BigInt Binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt kk = k;
  if (n - kk < kk) kk = n - kk;
  BigInt result = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    result = result * (n - kk + i) / i;
  }
  return result;
}

BigInt Pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::uint64_t ToU64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::kParameterOutOfRange,
                "value " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

std::string ToString(const Rational& r) {
  if (IsIntegral(r)) return Numerator(r).str();
  return Numerator(r).str() + "/" + Denominator(r).str();
}

namespace {

BigInt RoundHalfEven(const Rational& x) {
  BigInt q = Floor(x);
  Rational frac = x - Rational(q);
  Rational half(1, 2);
  if (frac > half || (frac == half && q % 2 != 0)) ++q;
  return q;
}

}  // namespace

std::string ToDecimal(const Rational& r, int places) {
  if (places < 0) places = 0;
  bool negative = r < 0;
  Rational x = negative ? Rational(-r) : r;
  BigInt scaled = RoundHalfEven(x * Rational(Pow(10, places)));
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

std::string Scientific::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "e%c%02d", exponent < 0 ? '-' : '+',
                exponent < 0 ? -exponent : exponent);
  return mantissa + buf;
}

Scientific ToScientific(const Rational& r, int mantissa_places) {
  Scientific out;
  if (r == 0) {
    out.mantissa = ToDecimal(r, mantissa_places);
    return out;
  }
  bool negative = r < 0;
  Rational x = negative ? Rational(-r) : r;
  int e = static_cast<int>(Numerator(x).str().size()) -
          static_cast<int>(Denominator(x).str().size());
  auto scale = [](int exp) {
    return exp >= 0 ? Rational(Pow(10, exp)) : Rational(1, Pow(10, -exp));
  };
  while (x < scale(e)) --e;
  while (x >= scale(e + 1)) ++e;
  Rational mantissa = x / scale(e);
  std::string text = ToDecimal(mantissa, mantissa_places);
  if (text.rfind("10", 0) == 0) {  // rounding carried into a new digit
    ++e;
    text = ToDecimal(x / scale(e), mantissa_places);
  }
  out.mantissa = negative ? "-" + text : text;
  out.exponent = e;
  return out;
}

}  // namespace pdakit
