#include <doctest.h>

#include "support.hpp"

using namespace sftglue;
using namespace sftglue::testing;
using sftglue::io::json;

TEST_SUITE("io") {

TEST_CASE("graph files") {
  const auto g = io::graph_from_json(
      io::parse_json(R"({"states": 4, "matrix": [[0,1,0,0],[1,0,1,0],[0,1,0,1],[0,0,1,0]]})"));
  CHECK(g.rows() == path4().rows());
  CHECK(io::graph_from_json(io::to_json(g)).rows() == g.rows());
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"states": 3, "matrix": [[1]]})")),
                  InputError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"matrix": [[1]]})")), InputError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"states": 1, "matrix": [[2]]})")),
                  InputError);
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string text = "{\n  \"states\": 2,\n  \"matrix\": [[1, 1], [1 0]]\n}";
  try {
    io::parse_json(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 25);  // the "0" after "[1 "
  }
}

TEST_CASE("point literals") {
  const auto x = io::point_from_json(
      io::parse_json(R"({"left_period": "12", "core": "121", "right_period": "1", "anchor": -1})"));
  CHECK(x == SymbolicPoint(w({1, 2}), w({1, 2, 1}), w({1}), -1));
  CHECK(io::point_from_json(io::parse_json(R"({"left_period": "1", "right_period": "1"})")) ==
        SymbolicPoint::periodic(w({1})));
  CHECK_THROWS_AS(io::point_from_json(io::parse_json(R"({"left_period": "1x", "right_period": "1"})")),
                  InputError);
  CHECK_THROWS_AS(io::point_from_json(io::parse_json(R"({"core": "1"})")), InputError);
  CHECK_THROWS_AS(io::point_from_json(io::parse_json("[1]")), InputError);

  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_point(path4(), rng);
    CHECK(io::point_from_json(io::parse_json(io::to_json(p).dump())) == p);
  }
}

TEST_CASE("orbit sequences and trace certificates round-trip") {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_orbit_sequence(golden_mean(), rng, 4, 6);
    CHECK(io::orbit_sequence_from_json(io::parse_json(io::to_json(c).dump())) == c);
    const auto t = construct_trace(golden_mean(), c, Resolution(2));
    const io::TraceCertificate cert{t.z, t.gap, 2, true};
    CHECK(io::trace_certificate_from_json(io::parse_json(io::to_json(cert).dump())) == cert);
  }
  CHECK_THROWS_AS(io::orbit_sequence_from_json(io::parse_json("[]")), InputError);
  CHECK_THROWS_AS(io::orbit_sequence_from_json(io::parse_json(R"([{"m": 1}])")), InputError);
}

TEST_CASE("matrices keep large entries exact") {
  const auto p = matrix_power(SftGraph::full_shift(3), 60);
  const auto j = io::to_json(p);
  CHECK(j[0][0].is_string());
  CHECK(io::int_matrix_from_json(io::parse_json(j.dump())) == p);
  const auto small = matrix_power(path4(), 3);
  CHECK(io::to_json(small)[1][2] == 3);
  CHECK(io::int_matrix_from_json(io::to_json(small)) == small);
}

TEST_CASE("analysis reports round-trip") {
  for (const auto& g : all_essential_graphs_up_to(2)) {
    const auto r = analyze(g, 10);
    CHECK(io::analysis_report_from_json(io::parse_json(io::to_json(r).dump())) == r);
  }
  const SftGraph bridge({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
  const auto r = analyze(bridge, 6);
  const auto j = io::to_json(r);
  CHECK(j["per_vertex_periods"][1] == "infinite");
  CHECK(io::analysis_report_from_json(j) == r);
  CHECK(io::space_class_from_json(io::to_json(SpaceClass{FiniteUnion{{1, 2}}})) ==
        SpaceClass{FiniteUnion{{1, 2}}});
  CHECK_THROWS_AS(io::space_class_from_json(json{{"kind", "Other"}}), InputError);
}

TEST_CASE("refutation certificates round-trip") {
  for (const auto& g : {path4(), golden_mean()}) {
    const auto r = refute_hyper_gluing(g, Resolution(1), 3, 1);
    const auto j = io::to_json(r);
    const auto back = io::hyper_refutation_from_json(io::parse_json(j.dump()));
    CHECK(io::to_json(back) == j);
    CHECK(back.all_unsat() == r.all_unsat());
    CHECK(back.x == r.x);
    for (std::size_t m = 0; m < r.verdicts.size(); ++m)
      for (std::size_t t = 0; t < r.verdicts[m].gaps.size(); ++t) {
        const auto& a = r.verdicts[m].gaps[t];
        const auto& b = back.verdicts[m].gaps[t];
        CHECK(a.sat == b.sat);
        CHECK(a.tracing_set == b.tracing_set);
        CHECK(a.uncovered.has_value() == b.uncovered.has_value());
        if (a.uncovered) CHECK(a.uncovered->element == b.uncovered->element);
      }
  }
  const auto pr = refute_hyper_gluing(path4(), Resolution(1), 1, 1);
  const auto j = io::to_json(pr);
  CHECK(j["verdicts"][0]["verdict"] == "UNSAT");
  CHECK(j["verdicts"][0]["gaps"][0].contains("uncovered_time"));
  CHECK(j["all_unsat"] == true);
}

TEST_CASE("other reports serialize") {
  const auto e = io::to_json(entropy(golden_mean(), 5));
  CHECK(e["word_counts"] == json::array({2, 3, 5, 8, 13}));
  const auto c = io::to_json(stable_census(full2(), SymbolicPoint::periodic(w({1})), Resolution(1), 3));
  CHECK(c["count"] == 8);
  CHECK(c["verdict"] == "GrowingUncountableAtDepth");
  const auto k = io::to_json(cantor_construct(full2(), SymbolicPoint::periodic(w({1})), Resolution(1), 2));
  CHECK(k["levels"].size() == 3);
  CHECK(k["levels"][2].size() == 4);
}

}  // TEST_SUITE
