#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "level.hpp"
#include "sector.hpp"

namespace osporb {

enum class Twist : int { untwisted = 0, twisted = 1 };

constexpr Twist twist_xor(Twist a, Twist b) {
  return a == b ? Twist::untwisted : Twist::twisted;
}

// A module label of the orbifold algebra: twist flag, mu4 sector, and index
// r in [1, 2k+2]. Equality is structural — there are exactly 8(2k+2) =
// 16k+16 labels per level and they are pairwise inequivalent.
struct OspOrbLabel {
  Twist twist = Twist::untwisted;
  SectorZ4 sector;
  int r = 1;

  // Comparison key (sector, twist, r): the canonical iteration order of
  // fusion-product outputs.
  std::tuple<int, int, int> canonical_key() const {
    return {sector.rank(), static_cast<int>(twist), r};
  }

  friend bool operator==(const OspOrbLabel& a, const OspOrbLabel& b) {
    return a.twist == b.twist && a.sector == b.sector && a.r == b.r;
  }
  friend bool operator!=(const OspOrbLabel& a, const OspOrbLabel& b) { return !(a == b); }
  friend bool operator<(const OspOrbLabel& a, const OspOrbLabel& b) {
    return a.canonical_key() < b.canonical_key();
  }
};

// The fusion unit.
inline OspOrbLabel unit_label() { return {Twist::untwisted, SectorZ4::even_plus(), 1}; }

inline bool is_valid(const Level& lv, const OspOrbLabel& x) {
  return x.r >= 1 && x.r <= lv.r_max();
}

inline void require_valid(const Level& lv, const OspOrbLabel& x) {
  if (!is_valid(lv, x))
    throw DomainError("label index r=" + std::to_string(x.r) + " outside [1, " +
                      std::to_string(lv.r_max()) + "] at level k=" + std::to_string(lv.k));
}

// Canonical grammar (bit-exact): `<twist>:<sector>:<r>` with twist in {U, T},
// sector in {even+, even-, odd+, odd-}, r base-10. Example: "T:even-:5".
inline std::string format_label(const OspOrbLabel& x) {
  std::string out(x.twist == Twist::twisted ? "T:" : "U:");
  out += x.sector.name();
  out += ':';
  out += std::to_string(x.r);
  return out;
}

// Display name in module notation, overlined when twisted:
// M_3^{even,+}, M̄_2^{odd,-}.
inline std::string pretty_label(const OspOrbLabel& x) {
  std::string out(x.twist == Twist::twisted ? "M̄_" : "M_");
  out += std::to_string(x.r);
  out += "^{";
  out += x.sector.is_even() ? "even," : "odd,";
  out += x.sector.sign() > 0 ? "+}" : "-}";
  return out;
}

// Parses the canonical grammar. Malformed text is a ParseError; a
// well-formed label with r outside [1, 2k+2] is a DomainError.
inline OspOrbLabel parse_label(const Level& lv, std::string_view text) {
  const auto bad = [&](const char* why) {
    return ParseError("malformed label '" + std::string(text) + "': " + why);
  };
  constexpr auto npos = std::string_view::npos;
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == npos ? npos : text.find(':', c1 + 1);
  if (c2 == npos) throw bad("expected <U|T>:<sector>:<r>");
  if (text.find(':', c2 + 1) != npos) throw bad("too many ':'-separated fields");

  const std::string_view twist_text = text.substr(0, c1);
  const std::string_view sector_text = text.substr(c1 + 1, c2 - c1 - 1);
  const std::string_view r_text = text.substr(c2 + 1);

  Twist twist;
  if (twist_text == "U") {
    twist = Twist::untwisted;
  } else if (twist_text == "T") {
    twist = Twist::twisted;
  } else {
    throw bad("twist must be U or T");
  }
  const std::optional<SectorZ4> sector = parse_sector(sector_text);
  if (!sector) throw bad("sector must be one of even+, even-, odd+, odd-");
  if (r_text.empty() || r_text.size() > 9 ||
      r_text.find_first_not_of("0123456789") != npos)
    throw bad("index must be a base-10 integer");
  int r = 0;
  std::from_chars(r_text.data(), r_text.data() + r_text.size(), r);

  const OspOrbLabel out{twist, *sector, r};
  require_valid(lv, out);
  return out;
}

// All 16k+16 labels in canonical enumeration order: twist (untwisted first),
// then sector in display order, then r ascending.
inline std::vector<OspOrbLabel> enumerate_labels(const Level& lv) {
  std::vector<OspOrbLabel> out;
  out.reserve(static_cast<std::size_t>(16 * lv.k + 16));
  for (const Twist twist : {Twist::untwisted, Twist::twisted})
    for (int rank = 0; rank < 4; ++rank)
      for (int r = 1; r <= lv.r_max(); ++r)
        out.push_back({twist, SectorZ4::from_rank(rank), r});
  return out;
}

// Position of a label in enumerate_labels(lv), in [0, 16k+16).
inline std::size_t label_index(const Level& lv, const OspOrbLabel& x) {
  require_valid(lv, x);
  const std::size_t family = static_cast<std::size_t>(lv.r_max());
  return (static_cast<std::size_t>(x.twist) * 4 + static_cast<std::size_t>(x.sector.rank())) * family +
         static_cast<std::size_t>(x.r - 1);
}

}  // namespace osporb
