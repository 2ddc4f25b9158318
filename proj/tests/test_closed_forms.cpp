#include "rcn/closed_forms.hpp"

#include "doctest.h"

using namespace rcn;

TEST_CASE("hill numbers") {
  CHECK(hill_number(4) == 0);
  CHECK(hill_number(5) == 1);
  CHECK(hill_number(6) == 3);
  CHECK(hill_number(7) == 9);
  CHECK(hill_number(8) == 18);
  CHECK(hill_number(10) == 60);
  CHECK(hill_number(12) == 150);
  CHECK(hill_number(14) == 315);
}

TEST_CASE("zarankiewicz numbers") {
  CHECK(zarankiewicz_number(3, 3) == 1);
  CHECK(zarankiewicz_number(4, 4) == 4);
  CHECK(zarankiewicz_number(5, 4) == 8);
  CHECK(zarankiewicz_number(5, 5) == 16);
  CHECK(zarankiewicz_number(7) == 81);
  CHECK(zarankiewicz_number(2, 100) == 0);
}

TEST_CASE("harborth-style upper expression") {
  CHECK(harborth_upper(8, 4) == Rat(6));
  CHECK(harborth_upper(12, 3) == Rat(60));
  CHECK(harborth_upper(12, 4) == Rat(707, 8));
  CHECK_THROWS_AS(harborth_upper(10, 4), DivisibilityError);
}

TEST_CASE("expected crossings of a random embedding") {
  const auto k63 = expected_crossings_random_embedding(
      GraphSpec::balanced_multipartite(6, 3), 3, 6);
  CHECK(k63.exact == Rat(2));
  const auto k84 = expected_crossings_random_embedding(
      GraphSpec::balanced_multipartite(8, 4), 18, 8);
  CHECK(k84.exact == Rat(468, 35));
  CHECK(k84.as_float().substr(0, 6) == "13.371");
  CHECK_THROWS_AS(expected_crossings_random_embedding(GraphSpec::complete(5),
                                                      18, 8),
                  SizeMismatch);
}

TEST_CASE("planted crossing counts") {
  const std::vector<int> k4_deg{3, 3, 3, 3};
  CHECK(planted_crossings(0, k4_deg, 6, 1) == 0);
  CHECK(planted_crossings(0, k4_deg, 6, 2) == 22);
  CHECK(planted_crossings(0, k4_deg, 6, 3) == 162);
  const std::vector<int> d3_deg{2, 2, 4, 4, 2, 2};
  CHECK(planted_crossings(0, d3_deg, 8, 2) == 24);
  CHECK(planted_crossings(0, d3_deg, 8, 3) == 180);
}

TEST_CASE("planted coefficients") {
  CHECK(planted_coefficient(0, 4, 1).exact == Rat(7, 512));
  CHECK(planted_coefficient(8, 4, 2).exact == Rat(19, 2048));
  CHECK(planted_coefficient(2033, 4, 6).exact == Rat(2951, 331776L));
  CHECK(planted_coefficient(0, 4, 1).as_float() == "0.013671875");
}

TEST_CASE("q-bar bounds bracket the conjectured constant") {
  CHECK(kQBarLow < kQBarHigh);
  CHECK(kQBarLow == Rat(379972, 1000000L));
  CHECK(kQBarHigh == Rat(380445, 1000000L));
}

TEST_CASE("bound evaluators") {
  const auto b = bound_evaluators(100, 4, kQBarHigh, Rat(7, 512));
  const Rat n4 = Rat(Int(100) * 100 * 100 * 100);
  CHECK(b.at("knr_rectilinear_upper").exact == kQBarHigh * Rat(3, 128) * n4);
  CHECK(b.at("knr_lower_from_kr").exact == Rat(7, 512) * n4 / 256);
  CHECK(b.at("layered_planted").exact == Rat(7, 4096) * n4);
  CHECK(b.at("layered_conditional_lower").exact == Rat(1, 1024) * n4);
  CHECK(b.at("layered_conditional_lower").exact <
        b.at("layered_planted").exact);
  // Quartic coefficients order as lower <= Harborth-style <= Hill embedding.
  CHECK(b.at("knr_harborth_approx").exact < b.at("knr_hill_embedding").exact);
}
