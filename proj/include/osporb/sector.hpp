#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace osporb {

// The sigma-eigenvalue grading of module labels. The four sectors correspond
// to the fourth roots of unity and multiply as the group mu4; a sector is
// stored as the exponent e of its eigenvalue i^e (i the imaginary unit):
//
//   even+ <-> i^0 = 1,   odd- <-> i^1 = +i,
//   even- <-> i^2 = -1,  odd+ <-> i^3 = -i.
//
// odd+ and odd- are the "odd,1" and "odd,2" eigencomponents (eigenvalues
// -i and +i respectively). Display order — and hence the canonical ordering
// of labels — is even+, even-, odd+, odd-.
class SectorZ4 {
 public:
  constexpr SectorZ4() = default;

  static constexpr SectorZ4 from_ipow(int e) { return SectorZ4(((e % 4) + 4) % 4); }
  static constexpr SectorZ4 even_plus() { return SectorZ4(0); }
  static constexpr SectorZ4 odd_minus() { return SectorZ4(1); }
  static constexpr SectorZ4 even_minus() { return SectorZ4(2); }
  static constexpr SectorZ4 odd_plus() { return SectorZ4(3); }

  // The sector with the given parity and sign.
  static constexpr SectorZ4 make(bool even, int sign) {
    return even ? (sign > 0 ? even_plus() : even_minus())
                : (sign > 0 ? odd_plus() : odd_minus());
  }

  // Exponent e of the eigenvalue i^e, in [0, 3].
  constexpr int ipow() const { return e_; }

  // Position in the display order even+ < even- < odd+ < odd-.
  constexpr int rank() const { return e_ == 0 ? 0 : e_ == 2 ? 1 : e_ == 3 ? 2 : 3; }
  static constexpr SectorZ4 from_rank(int rank) {
    return SectorZ4(rank == 0 ? 0 : rank == 1 ? 2 : rank == 2 ? 3 : 1);
  }

  constexpr bool is_even() const { return e_ % 2 == 0; }
  // +1 for even+ and odd+, -1 for even- and odd-.
  constexpr int sign() const { return (e_ == 0 || e_ == 3) ? +1 : -1; }

  constexpr std::string_view name() const {
    return e_ == 0 ? "even+" : e_ == 1 ? "odd-" : e_ == 2 ? "even-" : "odd+";
  }

  constexpr SectorZ4 inverse() const { return from_ipow(-e_); }

  friend constexpr SectorZ4 operator*(SectorZ4 a, SectorZ4 b) { return from_ipow(a.e_ + b.e_); }
  friend constexpr bool operator==(SectorZ4 a, SectorZ4 b) { return a.e_ == b.e_; }
  friend constexpr bool operator!=(SectorZ4 a, SectorZ4 b) { return a.e_ != b.e_; }

 private:
  constexpr explicit SectorZ4(int e) : e_(e) {}
  int e_ = 0;
};

// Group multiplication in mu4.
constexpr SectorZ4 sector_mul(SectorZ4 a, SectorZ4 b) { return a * b; }

// i^n as a sector value (the twist cocycle factor of derived products).
constexpr SectorZ4 sector_ipow(int n) { return SectorZ4::from_ipow(n); }

constexpr std::array<SectorZ4, 4> all_sectors() {
  return {SectorZ4::even_plus(), SectorZ4::even_minus(), SectorZ4::odd_plus(),
          SectorZ4::odd_minus()};
}

inline std::optional<SectorZ4> parse_sector(std::string_view text) {
  for (const SectorZ4 s : all_sectors())
    if (text == s.name()) return s;
  return std::nullopt;
}

}  // namespace osporb
