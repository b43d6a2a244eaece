#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <osporb/errors.hpp>
#include <osporb/label.hpp>
#include <osporb/level.hpp>
#include <osporb/sector.hpp>

using namespace osporb;

TEST_CASE("level derives the minimal-model parameters") {
  const Level lv(3);
  CHECK(lv.k == 3);
  CHECK(lv.p == 9);
  CHECK(lv.q == 5);
  CHECK(lv.r_max() == 8);
  CHECK_THROWS_AS(Level(0), DomainError);
  CHECK_THROWS_AS(Level(-2), DomainError);
}

TEST_CASE("sector eigenvalue exponents and names") {
  CHECK(SectorZ4::even_plus().ipow() == 0);
  CHECK(SectorZ4::odd_minus().ipow() == 1);
  CHECK(SectorZ4::even_minus().ipow() == 2);
  CHECK(SectorZ4::odd_plus().ipow() == 3);
  CHECK(SectorZ4::even_plus().name() == "even+");
  CHECK(SectorZ4::even_minus().name() == "even-");
  CHECK(SectorZ4::odd_plus().name() == "odd+");
  CHECK(SectorZ4::odd_minus().name() == "odd-");
  for (const SectorZ4 s : all_sectors()) {
    CHECK(SectorZ4::from_rank(s.rank()) == s);
    CHECK(SectorZ4::make(s.is_even(), s.sign()) == s);
    CHECK(parse_sector(s.name()) == s);
  }
  CHECK(!parse_sector("even"));
  CHECK(!parse_sector("odd*"));
}

TEST_CASE("sector multiplication is the mu4 group law") {
  // Exponents add mod 4.
  for (const SectorZ4 a : all_sectors())
    for (const SectorZ4 b : all_sectors()) {
      CHECK((a * b).ipow() == (a.ipow() + b.ipow()) % 4);
      CHECK(a * b == b * a);
      for (const SectorZ4 c : all_sectors()) CHECK((a * b) * c == a * (b * c));
    }
  for (const SectorZ4 a : all_sectors()) {
    CHECK(a * SectorZ4::even_plus() == a);
    CHECK(a * a.inverse() == SectorZ4::even_plus());
  }
  // Spot values: odd- * odd- = even-, odd+ * odd- = even+,
  // even- * odd+ = odd-.
  CHECK(SectorZ4::odd_minus() * SectorZ4::odd_minus() == SectorZ4::even_minus());
  CHECK(SectorZ4::odd_plus() * SectorZ4::odd_minus() == SectorZ4::even_plus());
  CHECK(SectorZ4::even_minus() * SectorZ4::odd_plus() == SectorZ4::odd_minus());
  CHECK(sector_ipow(5) == SectorZ4::odd_minus());
  CHECK(sector_ipow(-1) == SectorZ4::odd_plus());
}

TEST_CASE("enumeration covers all labels in canonical order") {
  for (const int k : {1, 2, 3, 8}) {
    const Level lv(k);
    const std::vector<OspOrbLabel> labels = enumerate_labels(lv);
    CHECK(labels.size() == static_cast<std::size_t>(16 * k + 16));
    CHECK(std::set<OspOrbLabel>(labels.begin(), labels.end()).size() == labels.size());
    CHECK(labels.front() == unit_label());
    // label_index is the inverse enumeration.
    for (std::size_t n = 0; n < labels.size(); ++n)
      CHECK(label_index(lv, labels[n]) == n);
  }
  // Untwisted block first, sectors in display order within each block.
  const Level lv(1);
  const std::vector<OspOrbLabel> labels = enumerate_labels(lv);
  CHECK(format_label(labels[0]) == "U:even+:1");
  CHECK(format_label(labels[4]) == "U:even-:1");
  CHECK(format_label(labels[8]) == "U:odd+:1");
  CHECK(format_label(labels[12]) == "U:odd-:1");
  CHECK(format_label(labels[16]) == "T:even+:1");
  CHECK(format_label(labels[31]) == "T:odd-:4");
}

TEST_CASE("format and parse round-trip every label") {
  for (const int k : {1, 2, 3}) {
    const Level lv(k);
    for (const OspOrbLabel& x : enumerate_labels(lv)) {
      CHECK(parse_label(lv, format_label(x)) == x);
    }
  }
}

TEST_CASE("pretty names carry index, parity, and twist") {
  const Level lv(2);
  CHECK(pretty_label(parse_label(lv, "U:even+:3")) == "M_3^{even,+}");
  CHECK(pretty_label(parse_label(lv, "U:odd-:2")) == "M_2^{odd,-}");
  const std::string twisted = pretty_label(parse_label(lv, "T:even-:1"));
  CHECK(twisted.find("M̄_1") != std::string::npos);
  CHECK(twisted.find("{even,-}") != std::string::npos);
}

TEST_CASE("malformed label text is a parse error") {
  const Level lv(1);
  for (const char* text : {"", "U", "U:even+", "U:even+:1:2", "X:even+:1", "U:even:1",
                           "U:even+:", "U:even+:one", "U:even+:1e2", "U:even+:-1",
                           "u:even+:1", "U : even+ : 1", "U:even+:0123456789"}) {
    CHECK_THROWS_AS(parse_label(lv, text), ParseError);
  }
}

TEST_CASE("well-formed label outside the level range is a domain error") {
  const Level lv(1);
  CHECK_THROWS_AS(parse_label(lv, "U:even+:9"), DomainError);
  CHECK_THROWS_AS(parse_label(lv, "T:odd-:0"), DomainError);
  CHECK_THROWS_AS(parse_label(lv, "U:even+:5"), DomainError);  // r_max = 4 at k=1
  CHECK_NOTHROW(parse_label(lv, "U:even+:4"));
  CHECK_THROWS_WITH(parse_label(lv, "U:even+:9"),
                    Catch::Matchers::ContainsSubstring("outside [1, 4]"));
}

TEST_CASE("canonical ordering sorts by sector rank, then twist, then index") {
  const OspOrbLabel a{Twist::untwisted, SectorZ4::even_plus(), 2};
  const OspOrbLabel b{Twist::untwisted, SectorZ4::even_minus(), 1};
  const OspOrbLabel c{Twist::twisted, SectorZ4::even_plus(), 1};
  const OspOrbLabel d{Twist::untwisted, SectorZ4::even_plus(), 3};
  CHECK(a < b);   // even+ before even-
  CHECK(a < c);   // same sector: untwisted before twisted
  CHECK(a < d);   // same sector and twist: by index
  CHECK(c < b);   // sector rank dominates twist
}
