#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include <osporb/errors.hpp>
#include <osporb/label.hpp>
#include <osporb/level.hpp>
#include <osporb/verify.hpp>

using namespace osporb;

namespace {

OspOrbLabel label(const Level& lv, const char* text) { return parse_label(lv, text); }

const VerificationReport& report_named(const std::vector<VerificationReport>& reports,
                                       const std::string& name) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const VerificationReport& r) { return r.check == name; });
  REQUIRE(it != reports.end());
  return *it;
}

}  // namespace

TEST_CASE("bilinear extension of fusion to formal sums") {
  const Level lv(1);
  const FormalSum<OspOrbLabel> empty;
  const FormalSum<OspOrbLabel> one = FormalSum<OspOrbLabel>::single(unit_label());

  // The empty sum annihilates; the unit sum is neutral.
  FormalSum<OspOrbLabel> some;
  some.add(label(lv, "U:even+:2"));
  some.add(label(lv, "T:odd-:1"), 3);
  CHECK(fuse_sums(lv, empty, some).empty());
  CHECK(fuse_sums(lv, some, empty).empty());
  CHECK(fuse_sums(lv, one, some) == some);
  CHECK(fuse_sums(lv, some, one) == some);

  // Multiplicities multiply through: (2x) (x) x doubles each output.
  FormalSum<OspOrbLabel> twice;
  twice.add(label(lv, "U:even+:2"), 2);
  const FormalSum<OspOrbLabel> prod =
      fuse_sums(lv, twice, FormalSum<OspOrbLabel>::single(label(lv, "U:even+:2")));
  CHECK(prod.coeff(label(lv, "U:even+:1")) == 2);
  CHECK(prod.coeff(label(lv, "U:even+:3")) == 2);
  CHECK(prod.term_count() == 2u);
  CHECK(prod.total_multiplicity() == 4);
}

TEST_CASE("formal sums reject negative multiplicities and drop zeros") {
  FormalSum<OspOrbLabel> sum;
  const OspOrbLabel x = unit_label();
  sum.add(x, 2);
  sum.add(x, -2);
  CHECK(sum.empty());
  CHECK(sum.coeff(x) == 0);
  sum.add(x, 1);
  CHECK_THROWS_AS(sum.add(x, -5), std::logic_error);
  CHECK(render_sum(sum, [](const OspOrbLabel& y) { return format_label(y); }) == "0");
}

TEST_CASE("every check passes at low levels") {
  for (int k = 1; k <= 3; ++k) {
    const Level lv(k);
    const std::vector<VerificationReport> reports = verify(lv, all_check_names());
    REQUIRE(reports.size() == all_check_names().size());
    for (const VerificationReport& rep : reports) {
      INFO(rep.check << " at k=" << k);
      CHECK(rep.pass);
      CHECK(rep.level == k);
      CHECK(!rep.skipped);
    }
  }
}

TEST_CASE("check case conventions at level 1") {
  const Level lv(1);
  const std::vector<VerificationReport> reports = verify(lv, all_check_names());
  CHECK(report_named(reports, "unit").cases == 32);                 // one per label
  CHECK(report_named(reports, "commutativity").cases == 32 * 32);   // ordered pairs
  CHECK(report_named(reports, "associativity").cases == 32768);     // 32^3 triples
  CHECK(report_named(reports, "counts").cases == 7);
}

TEST_CASE("reports come back in canonical order regardless of request order") {
  const Level lv(1);
  const std::vector<std::string> shuffled = {"unit", "counts", "weight_additivity", "unit"};
  const std::vector<VerificationReport> reports = verify(lv, shuffled);
  REQUIRE(reports.size() == 3u);  // duplicates collapse
  CHECK(reports[0].check == "counts");
  CHECK(reports[1].check == "unit");
  CHECK(reports[2].check == "weight_additivity");
}

TEST_CASE("unknown check names are rejected") {
  const Level lv(1);
  CHECK_THROWS_AS(verify(lv, {"unit", "no_such_check"}), DomainError);
  CHECK_THROWS_WITH(verify(lv, {"no_such_check"}),
                    Catch::Matchers::ContainsSubstring("no_such_check"));
}

TEST_CASE("weight collisions are findings, not failures") {
  const Level lv(2);
  const std::vector<VerificationReport> reports = verify(lv, {"weight_collisions"});
  const VerificationReport& rep = report_named(reports, "weight_collisions");
  CHECK(rep.pass);
  // The (i,r) = (1,1) / (1,6) coincidence (both weigh 1) must be surfaced.
  bool found = false;
  for (const Counterexample& ce : rep.counterexamples) {
    if (ce.inputs.find("(1,1)") != std::string::npos &&
        ce.inputs.find("(1,6)") != std::string::npos) {
      found = true;
      CHECK(ce.got == "all equal 1");
    }
  }
  CHECK(found);
}

TEST_CASE("associativity sweep can be configured out by level") {
  const Level lv(1);
  const VerifyOptions opts{/*max_assoc_level=*/0};
  const std::vector<VerificationReport> reports = verify(lv, {"associativity"}, opts);
  const VerificationReport& rep = report_named(reports, "associativity");
  CHECK(rep.skipped);
  CHECK(rep.pass);
  CHECK(rep.cases == 0);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("verification is deterministic apart from timing") {
  const Level lv(2);
  auto a = verify(lv, all_check_names());
  auto b = verify(lv, all_check_names());
  REQUIRE(a.size() == b.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n].elapsed_ms = 0.0;
    b[n].elapsed_ms = 0.0;
    CHECK(a[n].check == b[n].check);
    CHECK(a[n].pass == b[n].pass);
    CHECK(a[n].skipped == b[n].skipped);
    CHECK(a[n].cases == b[n].cases);
    CHECK(a[n].counterexamples_total == b[n].counterexamples_total);
    REQUIRE(a[n].counterexamples.size() == b[n].counterexamples.size());
    for (std::size_t m = 0; m < a[n].counterexamples.size(); ++m) {
      CHECK(a[n].counterexamples[m].inputs == b[n].counterexamples[m].inputs);
      CHECK(a[n].counterexamples[m].expected == b[n].counterexamples[m].expected);
      CHECK(a[n].counterexamples[m].got == b[n].counterexamples[m].got);
    }
  }
}

TEST_CASE("counterexample lists truncate but keep the full count") {
  VerificationReport rep;
  for (int n = 0; n < 100; ++n)
    detail::record(rep, true, "input " + std::to_string(n), "want", "got");
  CHECK_FALSE(rep.pass);
  CHECK(rep.counterexamples.size() == kMaxCounterexamples);
  CHECK(rep.counterexamples_total == 100);
  CHECK(rep.counterexamples.front().inputs == "input 0");
}

TEST_CASE("per-sector formula oracle covers exactly its tabulated domain") {
  const Level lv(2);
  long long covered = 0, total = 0;
  for (const OspOrbLabel& a : enumerate_labels(lv)) {
    for (const OspOrbLabel& b : enumerate_labels(lv)) {
      ++total;
      const auto tabulated = per_sector_formula_fuse(lv, a, b);
      if (a.twist == Twist::twisted) {
        CHECK(!tabulated);
        continue;
      }
      // Table rows exist unless the pairing is even (x) odd.
      const bool even_odd = a.sector.is_even() && !b.sector.is_even();
      CHECK(tabulated.has_value() == !even_odd);
      if (tabulated) {
        ++covered;
        CHECK(*tabulated == fuse(lv, a, b));
      }
    }
  }
  // 24 untwisted left factors x 48 right factors, minus the 12x12
  // even (x) odd pairs in twisted and untwisted right variants.
  CHECK(total == 48 * 48);
  CHECK(covered == 24 * 48 - 12 * 24);

  // The oracle dispatcher reaches every pair with an untwisted factor.
  for (const OspOrbLabel& a : enumerate_labels(lv))
    for (const OspOrbLabel& b : enumerate_labels(lv)) {
      if (a.twist == Twist::twisted && b.twist == Twist::twisted) continue;
      CHECK(mixed_oracle_fuse(lv, a, b) == fuse(lv, a, b));
    }
}
