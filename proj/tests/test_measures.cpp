#include <cmath>
#include <map>
#include <vector>

#include <doctest.h>

#include "dnt/dnt.hpp"
#include "test_support.hpp"

using dnt::DNumber;
using dnt::ElementPairDegree;
using dnt::Frame;
using dnt::NonExclusivity;
using dnt::NonExclusivityStrategy;
using dnt::SubsetIndex;

namespace {

struct Worked {
  Frame frame{std::vector<std::string>{"a", "b"}};
  DNumber d{frame, {{1, 0.6}, {2, 0.4}}};
  NonExclusivity ne = NonExclusivity::element_derived(
      frame, std::vector<ElementPairDegree>{{"a", "b", 0.3}});
};

// Nonzero rounding residual in the duality identity: three singleton masses
// and three pairwise degrees, none of which combine exactly in binary.
struct Probe {
  Frame frame{std::vector<std::string>{"a", "b", "c"}};
  DNumber d{frame, {{1, 0.1}, {2, 0.2}, {4, 0.7}}};
  NonExclusivity ne = NonExclusivity::element_derived(
      frame, std::vector<ElementPairDegree>{
                 {"a", "b", 0.3}, {"a", "c", 0.5}, {"b", "c", 0.7}});
};

}  // namespace

TEST_CASE("two-element worked example: bel 0.42/0.28, pl 0.72/0.58") {
  const Worked w;
  const SubsetIndex a = 1, b = 2;
  CHECK(std::abs(dnt::bel(w.d, w.ne, a) - 0.42) <= 1e-12);
  CHECK(std::abs(dnt::pl(w.d, w.ne, a) - 0.72) <= 1e-12);
  CHECK(std::abs(dnt::bel(w.d, w.ne, b) - 0.28) <= 1e-12);
  CHECK(std::abs(dnt::pl(w.d, w.ne, b) - 0.58) <= 1e-12);
  CHECK(std::abs(dnt::bel(w.d, w.ne, a) + dnt::pl(w.d, w.ne, b) - 1.0) <= 1e-12);

  CHECK(dnt::bel(w.d, w.ne, 0) == 0.0);
  CHECK(dnt::pl(w.d, w.ne, 0) == 0.0);
  CHECK(std::abs(dnt::bel(w.d, w.ne, 3) - 1.0) <= 1e-12);
  CHECK(std::abs(dnt::pl(w.d, w.ne, 3) - 1.0) <= 1e-12);

  const auto interval = dnt::belief_interval(w.d, w.ne, a);
  CHECK(interval.lower == dnt::bel(w.d, w.ne, a));
  CHECK(interval.upper == dnt::pl(w.d, w.ne, a));
  CHECK(interval.width() == interval.upper - interval.lower);
}

TEST_CASE("measure vectors match per-subset queries entry for entry") {
  const Worked w;
  const auto bels = dnt::bel_vector(w.d, w.ne);
  const auto pls = dnt::pl_vector(w.d, w.ne);
  REQUIRE(bels.size() == 4);
  REQUIRE(pls.size() == 4);
  for (const SubsetIndex subset : w.frame.subsets()) {
    CHECK(bels[subset] == dnt::bel(w.d, w.ne, subset));
    CHECK(pls[subset] == dnt::pl(w.d, w.ne, subset));
  }
  const double expected_bels[] = {0.0, 0.42, 0.28, 1.0};
  const double expected_pls[] = {0.0, 0.72, 0.58, 1.0};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(bels[k] - expected_bels[k]) <= 1e-12);
    CHECK(std::abs(pls[k] - expected_pls[k]) <= 1e-12);
  }
}

TEST_CASE("an incomplete d number keeps its deficit out of both measures") {
  const Frame frame({"a", "b"});
  const DNumber d(frame, {{1, 0.5}});
  const auto ne = NonExclusivity::exclusive(frame);
  CHECK(dnt::bel(d, ne, 1) == 0.5);
  CHECK(dnt::pl(d, ne, 1) == 0.5);
  CHECK(dnt::bel(d, ne, 2) == 0.0);
  CHECK(dnt::pl(d, ne, 2) == 0.0);
  // duality balances against the total mass, not against 1
  CHECK(dnt::bel(d, ne, 1) + dnt::pl(d, ne, 2) == d.total_mass());
}

TEST_CASE("measures insist on a shared frame") {
  const Frame frame_ab({"a", "b"});
  const Frame frame_ba({"b", "a"});
  const DNumber d(frame_ab, {{1, 1.0}});
  const auto ne = NonExclusivity::exclusive(frame_ba);
  CHECK_DNT_ERROR(frame_mismatch, dnt::bel(d, ne, 1));
  CHECK_DNT_ERROR(frame_mismatch, dnt::pl(d, ne, 1));
  CHECK_DNT_ERROR(frame_mismatch, dnt::verify_theorems(d, ne));
}

TEST_CASE("complete and exclusive degenerates to the classical measures") {
  const Frame frame({"a", "b", "c"});
  const DNumber d(frame, {{1, 0.5}, {3, 0.3}, {7, 0.2}});
  const auto ne = NonExclusivity::exclusive(frame);
  const auto bpa = d.as_bpa();
  for (const SubsetIndex subset : frame.subsets()) {
    CHECK(dnt::bel(d, ne, subset) == bpa.bel(subset));  // bit-exact
    CHECK(dnt::pl(d, ne, subset) == bpa.pl(subset));
  }
}

TEST_CASE("raising a non-exclusive degree never lowers plausibility") {
  const Frame frame({"a", "b", "c"});
  const DNumber d(frame, {{1, 0.4}, {2, 0.3}, {4, 0.3}});
  const auto low = NonExclusivity::element_derived(
      frame, std::vector<ElementPairDegree>{{"a", "b", 0.2}});
  const auto high = NonExclusivity::element_derived(
      frame, std::vector<ElementPairDegree>{{"a", "b", 0.6}});
  for (const SubsetIndex subset : frame.subsets()) {
    CHECK(dnt::pl(d, low, subset) <= dnt::pl(d, high, subset) + 1e-15);
    CHECK(dnt::bel(d, low, subset) + 1e-15 >= dnt::bel(d, high, subset));
  }
}

TEST_CASE("theorem report on the worked example") {
  const Worked w;
  const auto report = dnt::verify_theorems(w.d, w.ne);
  CHECK(report.total_mass == 1.0);
  CHECK(report.subsets_checked == 4);
  CHECK(report.all_passed());
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const auto& check = report.checks[k];
    CHECK(check.number == static_cast<int>(k) + 1);
    CHECK_FALSE(check.name.empty());
    CHECK(check.passed());
    CHECK(w.frame.valid(check.witness));
  }
  CHECK(report.checks[0].tolerance == dnt::kOrderingTolerance);
  CHECK(report.checks[3].tolerance == dnt::kDualityTolerance);
}

TEST_CASE("theorem tolerances are honest: zero demands exactness and fails") {
  const Probe p;

  const auto relaxed = dnt::verify_theorems(p.d, p.ne);
  CHECK(relaxed.all_passed());
  CHECK(relaxed.checks[3].max_residual > 0.0);  // real rounding residue

  const auto strict = dnt::verify_theorems(p.d, p.ne, /*duality=*/0.0);
  CHECK_FALSE(strict.all_passed());
  CHECK_FALSE(strict.checks[3].passed());
  CHECK(strict.checks[3].max_residual == relaxed.checks[3].max_residual);
  CHECK(p.frame.valid(strict.checks[3].witness));
  CHECK(strict.checks[3].witness != 0);
}

TEST_CASE("ordering checks carry their own tolerance") {
  // This seeded instance rounds one ordering sum a single ulp past exact.
  const auto inst = dnt::oracle::random_instance(
      873, 3, NonExclusivityStrategy::exclusive, true);
  const auto relaxed = dnt::verify_theorems(inst.dnumber, inst.nonexclusivity);
  CHECK(relaxed.all_passed());
  CHECK(relaxed.checks[2].max_residual > 0.0);

  const auto strict = dnt::verify_theorems(
      inst.dnumber, inst.nonexclusivity, dnt::kDualityTolerance,
      /*ordering=*/0.0);
  CHECK_FALSE(strict.checks[2].passed());
}

TEST_CASE("theorem sweep holds across strategies and completeness") {
  constexpr NonExclusivityStrategy kStrategies[] = {
      NonExclusivityStrategy::exclusive,
      NonExclusivityStrategy::element_derived,
      NonExclusivityStrategy::explicit_table,
  };
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto inst = dnt::oracle::random_instance(
        i, 1 + i % 8, kStrategies[(i / 8) % 3], (i / 24) % 2 == 0);
    const auto report = dnt::verify_theorems(inst.dnumber, inst.nonexclusivity);
    CHECK(report.all_passed());
    CHECK(report.subsets_checked == inst.dnumber.frame().subset_count());
  }
}

TEST_CASE("dense sweeps and tables respect their size caps") {
  std::vector<std::string> eleven;
  for (int i = 0; i < 11; ++i) eleven.push_back("L" + std::to_string(i));
  const Frame frame11(eleven);
  const DNumber d11(frame11, {{1, 1.0}});
  const auto ne11 = NonExclusivity::exclusive(frame11);
  CHECK_DNT_ERROR(frame_too_large_for_dense, dnt::bel_vector(d11, ne11));
  CHECK_DNT_ERROR(frame_too_large_for_dense, dnt::pl_vector(d11, ne11));
  CHECK(dnt::bel(d11, ne11, 1) == 1.0);  // per-subset queries still work

  std::vector<std::string> twentyone;
  for (int i = 0; i < 21; ++i) twentyone.push_back("L" + std::to_string(i));
  const Frame frame21(twentyone);
  const DNumber d21(frame21, {{1, 1.0}});
  const auto ne21 = NonExclusivity::exclusive(frame21);
  CHECK_DNT_ERROR(frame_too_large_for_sweep, dnt::verify_theorems(d21, ne21));
}
