#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpindex/records.hpp"

using namespace cpindex;
using namespace cpindex::records;

template <class R>
void round_trip(const R& r) {
  CHECK(parse<R>(render(r)) == r);
}

TEST_CASE("index records") {
  auto r = make_record(fhindex::compute_index(3, 2, fhindex::Field::Complex));
  CHECK(r.shape == "UAndV");
  CHECK(r.l == 3);
  CHECK(r.q == 2);
  round_trip(r);
  r.closedShape = "UAndV";
  r.closedL = 3;
  r.match = true;
  r.elapsed = 0.1 + 0.2;
  round_trip(r);
  const auto j = nlohmann::json::parse(render(r));
  for (const char* key : {"p", "n", "field", "a", "q", "shape", "l", "generatorsUsed", "degreesScanned", "elapsed"})
    CHECK(j.contains(key));
}

TEST_CASE("series records") {
  SeriesRecord s;
  s.field = "real";
  s.j = 3;
  s.r = 3;
  s.depth = 4;
  s.presentation = "gen p1_1 4 even\n";
  s.series = {1, 0, 0, 0, 2};
  round_trip(s);
  s.fibration = s.series;
  s.gaussian = std::vector<std::int64_t>{1, 0, 1};
  s.fibrationError = "negative coefficient";
  round_trip(s);
}

TEST_CASE("wreath records") {
  WreathRecord w;
  w.classes = {{"c1", 2, "O(1|1|c1)"}, {"c3", 6, "P(c1)"}};
  round_trip(w);
}

TEST_CASE("verification records") {
  const auto v = make_record(fhindex::verify_reduction_relations(3, 3, fhindex::Field::Complex));
  CHECK(v.passed);
  CHECK(v.checks.size() == 8);
  round_trip(v);
}

TEST_CASE("shadow records") {
  const auto s = make_record(fhindex::shadow_bound(3, 3, fhindex::Field::Real));
  CHECK(s.maxR == 7);
  CHECK(s.flagIndex == "(v^8)");
  CHECK(s.admitsMaxR);
  CHECK_FALSE(s.admitsMaxRPlusOne);
  round_trip(s);
}

TEST_CASE("selftest records") {
  SelftestRecord s;
  s.criteria = {{1, "one", true, "fine", 0.5}, {2, "two", false, "a \"quoted\" detail\nwith a newline", 1e-9}};
  round_trip(s);
}

TEST_CASE("malformed records") {
  CHECK_THROWS(parse<IndexRecord>("{\"p\": 3}"));
  CHECK_THROWS(parse<WreathRecord>("not json"));
}
