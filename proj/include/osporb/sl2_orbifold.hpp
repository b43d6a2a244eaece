#pragma once

#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "formal_sum.hpp"
#include "label.hpp"
#include "level.hpp"
#include "rational.hpp"
#include "sector.hpp"

namespace osporb {

// A module label of the Z2-orbifold of the level-k affine sl2 algebra:
// twist flag, spin i in [0, k], and the sign of the eigencomponent.
// 2(k+1) untwisted plus 2(k+1) twisted labels per level: 4k+4 in total.
struct Sl2OrbLabel {
  Twist twist = Twist::untwisted;
  int i = 0;
  int sign = +1;  // +1 or -1

  std::tuple<int, int, int> key() const {
    return {static_cast<int>(twist), i, sign > 0 ? 0 : 1};
  }
  friend bool operator==(const Sl2OrbLabel& a, const Sl2OrbLabel& b) { return a.key() == b.key(); }
  friend bool operator!=(const Sl2OrbLabel& a, const Sl2OrbLabel& b) { return !(a == b); }
  friend bool operator<(const Sl2OrbLabel& a, const Sl2OrbLabel& b) { return a.key() < b.key(); }
};

// Rendered as L[k,i]+ / L[k,i]- (untwisted) and TL[k,i]+ / TL[k,i]- (twisted).
inline std::string format_sl2_label(const Level& lv, const Sl2OrbLabel& x) {
  std::string out(x.twist == Twist::twisted ? "TL[" : "L[");
  out += std::to_string(lv.k);
  out += ',';
  out += std::to_string(x.i);
  out += ']';
  out += x.sign > 0 ? '+' : '-';
  return out;
}

inline void require_valid_sl2(const Level& lv, const Sl2OrbLabel& x) {
  if (x.i < 0 || x.i > lv.k)
    throw DomainError("spin i=" + std::to_string(x.i) + " outside [0, " + std::to_string(lv.k) +
                      "]");
  if (x.sign != +1 && x.sign != -1) throw DomainError("sl2 label sign must be +1 or -1");
}

// sign(i,j,l)^+: + exactly when i+j-l is a multiple of 4. Defined only on
// triples with i+j+l even.
inline int sign_plus(int i, int j, int l) {
  if (((i + j + l) % 2 + 2) % 2 != 0)
    throw DomainError("sign(i,j,l) requires i+j+l even, got (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(l) + ")");
  return ((i + j - l) % 4 + 4) % 4 == 0 ? +1 : -1;
}

// sign(i,j,l)^- is the pointwise opposite of sign(i,j,l)^+.
inline int sign_minus(int i, int j, int l) { return -sign_plus(i, j, l); }

// Lowest conformal weight i(i+2)/(4(k+2)) of the spin-i module.
inline Rational sl2_weight(const Level& lv, int i) {
  if (i < 0 || i > lv.k)
    throw DomainError("spin i=" + std::to_string(i) + " outside [0, " + std::to_string(lv.k) +
                      "]");
  return Rational(static_cast<long long>(i) * (i + 2), 4LL * (lv.k + 2));
}

// sigma-eigenvalue on the distinguished lowest-weight vector of the spin-i
// module: 1, -i, -1, +i for i = 0, 1, 2, 3 mod 4 — that is, i^{-i} as an
// element of mu4.
inline SectorZ4 sl2_sigma_eigenvalue(int i) {
  if (i < 0) throw DomainError("spin must be nonnegative");
  return sector_ipow(-i);
}

// All 4k+4 labels: twist (untwisted first), spin ascending, + before -.
inline std::vector<Sl2OrbLabel> enumerate_sl2_labels(const Level& lv) {
  std::vector<Sl2OrbLabel> out;
  out.reserve(static_cast<std::size_t>(4 * lv.k + 4));
  for (const Twist twist : {Twist::untwisted, Twist::twisted})
    for (int i = 0; i <= lv.k; ++i)
      for (const int sign : {+1, -1}) out.push_back({twist, i, sign});
  return out;
}

// Z2-orbifold fusion: the sum over |i-j| <= l <= i+j with i+j+l even and
// i+j+l <= 2k of the label with sign sign(i,j,l)^{s1*s2}; the output twist
// is the XOR of the input twists. The twisted (x) twisted sector is outside
// the source fusion table and is rejected rather than guessed.
inline FormalSum<Sl2OrbLabel> sl2_fuse(const Level& lv, const Sl2OrbLabel& a,
                                       const Sl2OrbLabel& b) {
  require_valid_sl2(lv, a);
  require_valid_sl2(lv, b);
  if (a.twist == Twist::twisted && b.twist == Twist::twisted)
    throw UnsupportedSectorError(
        "twisted (x) twisted is outside the sl2-orbifold fusion table");
  const Twist twist = twist_xor(a.twist, b.twist);
  FormalSum<Sl2OrbLabel> out;
  for (int l = std::abs(a.i - b.i); l <= a.i + b.i && a.i + b.i + l <= 2 * lv.k; ++l) {
    if ((a.i + b.i + l) % 2 != 0) continue;
    out.add({twist, l, a.sign * b.sign * sign_plus(a.i, b.i, l)}, 1);
  }
  return out;
}

}  // namespace osporb
