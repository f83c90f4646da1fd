// Copyright 2026 The Contextium Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contextium/rational.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace contextium {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("need >= 1 significant digit");
  const bool neg = num_ < 0;
  unsigned __int128 num = neg ? -static_cast<__int128>(num_) : num_;
  const unsigned __int128 den = den_;
  if (num == 0) {
    return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
  }

  // Scale to num/den in [1, 10) * 10^exp10.
  int exp10 = 0;
  unsigned __int128 scaled_den = den;
  while (num >= scaled_den * 10) {
    scaled_den *= 10;
    ++exp10;
  }
  while (num < scaled_den) {
    num *= 10;
    --exp10;
  }
  // Collect significant digits plus one for rounding.
  std::string digits;
  unsigned __int128 rem = num;
  for (int i = 0; i <= significant; ++i) {
    const auto d = static_cast<int>(rem / scaled_den);
    digits.push_back(static_cast<char>('0' + d));
    rem = (rem % scaled_den) * 10;
  }
  const bool round_up = digits.back() >= '5';
  digits.pop_back();
  if (round_up) {
    int i = significant - 1;
    while (i >= 0 && digits[i] == '9') digits[i--] = '0';
    if (i >= 0) {
      ++digits[i];
    } else {
      digits.insert(digits.begin(), '1');
      digits.pop_back();
      ++exp10;
    }
  }

  std::string out;
  if (exp10 >= 0) {
    const auto int_len = static_cast<std::size_t>(exp10) + 1;
    if (int_len >= digits.size()) {
      out = digits + std::string(int_len - digits.size(), '0');
    } else {
      out = digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + digits;
  }
  return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace contextium
