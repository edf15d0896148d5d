#include <catch_amalgamated.hpp>

#include <random>

#include "rankfit/error.hpp"
#include "rankfit/ingest.hpp"

using namespace rankfit;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected rankfit::Error");
  return ErrorKind::domain;
}

std::optional<std::size_t> line_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.line();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse_csv: raw values are sorted descending") {
  const auto res = parse_csv("5.0\n1.0\n3.0");
  REQUIRE(res.series.size() == 3);
  CHECK(res.series.value_at_rank(1) == 5.0);
  CHECK(res.series.value_at_rank(2) == 3.0);
  CHECK(res.series.value_at_rank(3) == 1.0);
  CHECK(res.warnings.empty());
}

TEST_CASE("parse_csv: pre-ranked with ties") {
  const auto res = parse_csv("1,2.0\n2,2.0\n3,0.5", {InputMode::pre_ranked});
  REQUIRE(res.series.size() == 3);
  CHECK(res.series.value_at_rank(2) == 2.0);
  CHECK(res.series.value_at_rank(3) == 0.5);
}

TEST_CASE("parse_csv: pre-ranked rows are re-sorted by rank") {
  const auto res = parse_csv("rank,journal,impact\n3,C,0.5\n1,A,9\n2,B,4\n", {InputMode::pre_ranked});
  CHECK(res.series.value_at_rank(1) == 9.0);
  CHECK(res.series.label_at_rank(1) == "A");
  CHECK(res.series.label_at_rank(3) == "C");
}

TEST_CASE("parse_csv: zero policy") {
  IngestOptions drop{InputMode::raw_values, ZeroPolicy::drop_with_warning, ','};
  const auto res = parse_csv("4.0\n0.0\n2.0", drop);
  REQUIRE(res.series.size() == 2);
  CHECK(res.series.value_at_rank(1) == 4.0);
  CHECK(res.series.value_at_rank(2) == 2.0);
  REQUIRE(res.warnings.size() == 1);
  CHECK(res.warnings[0].find("line 2") != std::string::npos);

  auto reject = [] { parse_csv("4.0\n0.0\n2.0"); };
  CHECK(kind_of(reject) == ErrorKind::validation);
  CHECK(line_of(reject) == 2);
  CHECK(kind_of([] { parse_csv("4.0\n-1\n2.0"); }) == ErrorKind::validation);
  CHECK(kind_of([&] { parse_csv("0\n0\n", drop); }) == ErrorKind::empty_series);
}

TEST_CASE("parse_csv: error paths") {
  auto bad_cell = [] { parse_csv("value\n1.0\nabc\n"); };
  CHECK(kind_of(bad_cell) == ErrorKind::parse);
  CHECK(line_of(bad_cell) == 3);
  CHECK(kind_of([] { parse_csv(""); }) == ErrorKind::empty_series);
  CHECK(kind_of([] { parse_csv("value\n\n"); }) == ErrorKind::empty_series);
  CHECK(kind_of([] { parse_csv("1,3.0\n1,2.0\n", {InputMode::pre_ranked}); }) == ErrorKind::validation);
  CHECK(kind_of([] { parse_csv("1,3.0\n3,2.0\n", {InputMode::pre_ranked}); }) == ErrorKind::validation);
  CHECK(kind_of([] { parse_csv("1,1.0\n2,2.0\n", {InputMode::pre_ranked}); }) == ErrorKind::validation);
  CHECK(kind_of([] { parse_csv("x,1.0\n", {InputMode::pre_ranked}); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_csv("a,b,1.0\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_csv("inf\n"); }) == ErrorKind::parse);
}

TEST_CASE("parse_csv: labels, header and delimiters") {
  const auto res = parse_csv("journal\tif\nPhys Rev\t2.5\r\nAnn Math\t3.1\n", {InputMode::raw_values, ZeroPolicy::reject, '\t'});
  REQUIRE(res.series.size() == 2);
  CHECK(res.series.label_at_rank(1) == "Ann Math");
  CHECK(res.series.value_at_rank(2) == 2.5);
  CHECK(res.series.has_labels());

  const auto semi = parse_csv("1;9\n2;8\n", {InputMode::pre_ranked, ZeroPolicy::reject, ';'});
  CHECK(semi.series.size() == 2);
}

TEST_CASE("parse_csv: pre-ranked drop renumbers the remaining ranks") {
  IngestOptions opts{InputMode::pre_ranked, ZeroPolicy::drop_with_warning, ','};
  const auto res = parse_csv("1,5\n2,3\n3,0\n", opts);
  CHECK(res.series.size() == 2);
  CHECK(res.warnings.size() == 1);
}

TEST_CASE("rank_raw: stable dense ranks") {
  const std::vector<double> v{2, 7, 7, 1};
  const std::vector<std::optional<std::string>> labels{"a", "first", "second", "d"};
  const auto s = rank_raw(v, labels);
  CHECK(s.value_at_rank(1) == 7.0);
  CHECK(s.label_at_rank(1) == "first");
  CHECK(s.label_at_rank(2) == "second");
  CHECK(s.value_at_rank(3) == 2.0);
  CHECK(s.value_at_rank(4) == 1.0);

  const std::vector<double> single{3.14};
  CHECK(rank_raw(single).size() == 1);
  CHECK(kind_of([] { rank_raw(std::vector<double>{}); }) == ErrorKind::empty_series);
  CHECK(kind_of([] { rank_raw(std::vector<double>{1.0, 0.0}); }) == ErrorKind::validation);
}

TEST_CASE("property: ranked series invariants and idempotent re-ranking") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(g);
    std::vector<double> v(n);
    // Coarse values so that ties are common.
    for (double& x : v) x = 0.25 * static_cast<double>(std::uniform_int_distribution<int>(1, 40)(g));
    const auto s = rank_raw(v);
    REQUIRE(s.size() == n);
    for (std::size_t r = 1; r <= n; ++r) {
      CHECK(s.value_at_rank(r) > 0.0);
      if (r > 1) CHECK(s.value_at_rank(r) <= s.value_at_rank(r - 1));
      CHECK(s.entry(r).rank == r);
    }
    const auto again = rank_raw(s.values());
    CHECK(again == s);
  }
}
