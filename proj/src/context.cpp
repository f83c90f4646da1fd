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

#include "contextium/context.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "contextium/errors.hpp"

namespace contextium {

namespace {

void check_enumeration_range(int n) {
  if (n < kMinEnumerationQubits || n > kMaxEnumerationQubits) {
    throw CapabilityError("context enumeration supports " +
                          std::to_string(kMinEnumerationQubits) + " <= n <= " +
                          std::to_string(kMaxEnumerationQubits) + ", got n = " +
                          std::to_string(n));
  }
}

void check_closed_form_range(int n) {
  if (n < 2 || n > kMaxQubits) {
    throw CapabilityError("closed-form counts need 2 <= n <= " +
                          std::to_string(kMaxQubits) + ", got n = " +
                          std::to_string(n));
  }
}

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("count overflow");
  return r;
}

u128 checked_add(u128 a, u128 b) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("count overflow");
  return r;
}

std::uint64_t narrow(u128 v) {
  if (v > u128{UINT64_MAX}) throw InvariantError("count exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

u128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  u128 r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, static_cast<u128>(n - k + i)) / i;
  return r;
}

u128 pow_u128(u128 base, int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

Context Context::make(const PauliString& a, const PauliString& b,
                      const PauliString& c) {
  const int n = a.num_qubits();
  for (const auto* p : {&a, &b, &c}) require_observable(*p, n);
  if (a == b || a == c || b == c) {
    throw InvariantError("context members must be distinct: " + a.str() + ", " +
                         b.str() + ", " + c.str());
  }
  if (!commutes(a, b) || !commutes(a, c) || !commutes(b, c)) {
    throw InvariantError("context members must commute pairwise: " + a.str() +
                         ", " + b.str() + ", " + c.str());
  }
  const auto [ph_ab, ab] = multiply(a, b);
  const auto [ph_abc, abc] = multiply(ab, c);
  if (!abc.is_identity()) {
    throw InvariantError("product of " + a.str() + ", " + b.str() + ", " +
                         c.str() + " is not +-identity");
  }
  const Phase total = ph_ab + ph_abc;
  if (!total.is_real()) {
    throw InvariantError("imaginary phase on commuting trio");
  }
  std::array<PauliString, 3> m{a, b, c};
  std::sort(m.begin(), m.end());
  return Context(m, total.sign());
}

Context Context::from_pair(const PauliString& a, const PauliString& b) {
  return make(a, b, multiply(a, b).second);
}

bool Context::contains(const PauliString& p) const {
  return std::find(members_.begin(), members_.end(), p) != members_.end();
}

std::ostream& operator<<(std::ostream& os, const Context& c) {
  return os << '{' << c[0] << ", " << c[1] << ", " << c[2] << "}"
            << (c.negative() ? "-" : "+");
}

int ColumnClassProfile::predicted_sign() const {
  const int a = clockwise;
  const int b = counter_clockwise;
  if ((a + b) % 2 != 0) return 0;
  return ((a / 2 + b / 2) % 2 == 1) ? -1 : 1;
}

ColumnClassProfile column_profile(const Context& c) {
  ColumnClassProfile prof;
  for (int q = 0; q < c.num_qubits(); ++q) {
    const char p0 = c[0].at(q), p1 = c[1].at(q), p2 = c[2].at(q);
    const int ids = (p0 == 'I') + (p1 == 'I') + (p2 == 'I');
    if (ids == 3) {
      ++prof.all_identity;
    } else if (ids == 2) {
      ++prof.single_pauli;
    } else if (ids == 1) {
      const char u = p0 != 'I' ? p0 : p1;
      const char v = p2 != 'I' ? p2 : p1;
      if (u == v) ++prof.pair_with_identity; else ++prof.other;
    } else if (p0 != p1 && p1 != p2 && p0 != p2) {
      // Cyclic successor in X -> Y -> Z -> X.
      auto next = [](char ch) { return ch == 'X' ? 'Y' : ch == 'Y' ? 'Z' : 'X'; };
      if (next(p0) == p1) ++prof.counter_clockwise; else ++prof.clockwise;
    } else {
      ++prof.other;
    }
  }
  return prof;
}

void for_each_context(int n, const std::function<void(const Context&)>& visit) {
  check_enumeration_range(n);
  const std::uint64_t limit = std::uint64_t{1} << (2 * n);
  for (std::uint64_t ka = 1; ka < limit; ++ka) {
    const PauliString a = PauliString::from_key(n, ka);
    for (std::uint64_t kb = ka + 1; kb < limit; ++kb) {
      // The third member is fixed by the pair; emit only from the pair of
      // smallest keys so each trio appears once.
      const std::uint64_t kc = ka ^ kb;
      if (kc <= kb) continue;
      const PauliString b = PauliString::from_key(n, kb);
      if (!commutes(a, b)) continue;
      const auto [phase, c] = multiply(a, b);
      if (!phase.is_real()) throw InvariantError("imaginary phase on commuting pair");
      visit(Context::make(a, b, c));
    }
  }
}

std::vector<Context> enumerate_contexts(int n) {
  std::vector<Context> out;
  if (n >= kMinEnumerationQubits && n <= kMaxEnumerationQubits) {
    out.reserve(count_contexts_closed_form(n));
  }
  for_each_context(n, [&](const Context& c) { out.push_back(c); });
  return out;
}

ContextCounts count_by_enumeration(int n) {
  ContextCounts counts;
  for_each_context(n, [&](const Context& c) {
    ++counts.total;
    if (c.negative()) ++counts.negative;
  });
  return counts;
}

std::uint64_t count_contexts_closed_form(int n) {
  check_closed_form_range(n);
  const u128 all = (u128{1} << (2 * n)) - 1;
  const u128 partners = (u128{1} << (2 * (n - 1))) - 1;
  return narrow(checked_mul(all, partners) / 3);
}

std::uint64_t count_negative_closed_form(int n) {
  check_closed_form_range(n);
  u128 total = 0;
  for (int c = 0; c <= n - 2; ++c) {
    for (int a = 0; a + c <= n; ++a) {
      for (int b = 0; a + b + c <= n; ++b) {
        if ((a + b) % 2 != 0) continue;
        if ((a / 2 + b / 2) % 2 != 1) continue;
        u128 term = checked_mul(binomial(n, c), binomial(n - c, a));
        term = checked_mul(term, binomial(n - c - a, b));
        term = checked_mul(term, pow_u128(3, 2 * n - a - b - 2 * c));
        total = checked_add(total, term);
      }
    }
  }
  if (total % 6 != 0) throw InvariantError("negative-context sum not divisible by 6");
  return narrow(total / 6);
}

}  // namespace contextium
