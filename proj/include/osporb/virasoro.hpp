#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "formal_sum.hpp"
#include "level.hpp"
#include "rational.hpp"

namespace osporb {

// A minimal-model label (r,s) of the Virasoro algebra at central charge
// c_{p,q}, subject to the Kac-table identification (r,s) ~ (q-r, p-s). The
// canonical representative of an identified pair is its lexicographic
// minimum, so there are (p-1)(q-1)/2 distinct canonical labels.
struct VirLabel {
  int r = 1;
  int s = 1;

  std::tuple<int, int> key() const { return {r, s}; }
  friend bool operator==(const VirLabel& a, const VirLabel& b) { return a.key() == b.key(); }
  friend bool operator!=(const VirLabel& a, const VirLabel& b) { return !(a == b); }
  friend bool operator<(const VirLabel& a, const VirLabel& b) { return a.key() < b.key(); }
};

inline std::string format_vir_label(const VirLabel& x) {
  return "V[" + std::to_string(x.r) + "," + std::to_string(x.s) + "]";
}

// c_{p,q} = 1 - 6(p-q)^2/(pq), defined for coprime p, q >= 2.
inline Rational vir_central_charge(int p, int q) {
  if (p < 2 || q < 2)
    throw DomainError("central-charge parameters must be >= 2, got (" + std::to_string(p) +
                      "," + std::to_string(q) + ")");
  if (std::gcd(p, q) != 1)
    throw DomainError("central-charge parameters must be coprime, got (" + std::to_string(p) +
                      "," + std::to_string(q) + ")");
  const long long d = p - q;
  return Rational(1) - Rational(6 * d * d, static_cast<long long>(p) * q);
}

inline bool vir_in_table(const Level& lv, const VirLabel& x) {
  return 1 <= x.r && x.r <= lv.q - 1 && 1 <= x.s && x.s <= lv.p - 1;
}

inline void require_vir_in_table(const Level& lv, const VirLabel& x) {
  if (!vir_in_table(lv, x))
    throw DomainError("Kac label " + format_vir_label(x) + " outside the (p,q)=(" +
                      std::to_string(lv.p) + "," + std::to_string(lv.q) + ") table");
}

// Kac weight h_{p,q}^{r,s} = ((sq - rp)^2 - (p-q)^2) / (4pq) for
// 1 <= r <= q-1, 1 <= s <= p-1.
inline Rational vir_weight(int p, int q, int r, int s) {
  if (r < 1 || r > q - 1 || s < 1 || s > p - 1)
    throw DomainError("Kac label (" + std::to_string(r) + "," + std::to_string(s) +
                      ") outside the (p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                      ") table");
  const long long a = static_cast<long long>(s) * q - static_cast<long long>(r) * p;
  const long long d = p - q;
  return Rational(a * a - d * d, 4LL * p * q);
}

// Window coefficient of minimal-model fusion:
// 1 iff |r-r'|+1 <= r'' <= min{r+r'-1, 2u-r-r'} and r+r'+r'' is odd.
inline int n_coeff(int u, int r, int r1, int r2) {
  const int lo = (r > r1 ? r - r1 : r1 - r) + 1;
  const int hi = std::min(r + r1 - 1, 2 * u - r - r1);
  return (lo <= r2 && r2 <= hi && (r + r1 + r2) % 2 == 1) ? 1 : 0;
}

// Canonical representative under (r,s) ~ (q-r, p-s).
inline VirLabel vir_canonical(const Level& lv, const VirLabel& x) {
  require_vir_in_table(lv, x);
  const VirLabel mirror{lv.q - x.r, lv.p - x.s};
  return std::min(x, mirror);
}

// All (p-1)(q-1)/2 canonical labels in ascending (r,s) order.
inline std::vector<VirLabel> enumerate_vir_labels(const Level& lv) {
  std::vector<VirLabel> out;
  for (int r = 1; r <= lv.q - 1; ++r)
    for (int s = 1; s <= lv.p - 1; ++s) {
      const VirLabel x{r, s};
      if (vir_canonical(lv, x) == x) out.push_back(x);
    }
  return out;
}

// Two distinct raw fusion channels of one product collapsing onto the same
// canonical label. Not expected to occur for these (p,q); surfaced as a
// structured record so it can never pass silently.
struct VirMergeEvent {
  VirLabel left;       // product inputs (canonical)
  VirLabel right;
  VirLabel raw_a;      // the two distinct raw channels
  VirLabel raw_b;
  VirLabel canonical;  // their common canonical image
};

// Minimal-model fusion: the double window sum over raw channels
// (r'', s''), canonicalized. Channel merges, if any, are appended to
// *merges.
inline FormalSum<VirLabel> vir_fuse(const Level& lv, const VirLabel& a, const VirLabel& b,
                                    std::vector<VirMergeEvent>* merges = nullptr) {
  const VirLabel ca = vir_canonical(lv, a);
  const VirLabel cb = vir_canonical(lv, b);
  FormalSum<VirLabel> out;
  std::map<VirLabel, VirLabel> first_raw;
  for (int r2 = 1; r2 <= lv.q - 1; ++r2)
    for (int s2 = 1; s2 <= lv.p - 1; ++s2) {
      if (n_coeff(lv.q, ca.r, cb.r, r2) * n_coeff(lv.p, ca.s, cb.s, s2) == 0) continue;
      const VirLabel raw{r2, s2};
      const VirLabel canon = vir_canonical(lv, raw);
      const auto [it, inserted] = first_raw.try_emplace(canon, raw);
      if (!inserted && merges != nullptr) merges->push_back({ca, cb, it->second, raw, canon});
      out.add(canon, 1);
    }
  return out;
}

}  // namespace osporb
