#include <gtest/gtest.h>

#include "kdiam/io.hpp"
#include "kdiam/svg.hpp"

using namespace kdiam;
using Q = Rational;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::invalid_spec;
}

}  // namespace

TEST(Parse, Triangle) {
  auto x = parse_configuration(R"({"dim":2,"scalar":"rational","points":[["0","0"],["1","0"],["0","1"]]})");
  const auto& c = std::get<PointConfiguration<Q>>(x);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1][0], Q(1));
}

TEST(Parse, MultiplicitiesExpandInPlace) {
  auto x = parse_configuration(
      R"({"dim":2,"scalar":"rational","points":[["0","0"],["1","0"],["0","1"]],"multiplicities":[2,1,3]})");
  const auto& c = std::get<PointConfiguration<Q>>(x);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[2][0], Q(1));
  EXPECT_EQ(c[3], c[5]);
}

TEST(Parse, ExactThirdAndDefaults) {
  auto x = parse_configuration(R"({"dim":2,"points":[["1/3","0"]]})");
  const auto& c = std::get<PointConfiguration<Q>>(x);
  EXPECT_EQ(c[0][0], Q(1, 3));
  auto d = parse_configuration(R"({"dim":1,"points":[[0.1]]})");
  EXPECT_EQ(std::get<PointConfiguration<Q>>(d)[0][0], Q(1, 10));
  auto f = parse_configuration(R"({"dim":1,"scalar":"float","points":[[0.1],["1/4"]]})");
  EXPECT_EQ(std::get<PointConfiguration<double>>(f)[1][0], 0.25);
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of([] { parse_configuration("{\"dim\":2,\n\"points\": [[\"0\",]]}"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_configuration(R"({"dim":3,"points":[["0","0"]]})"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_configuration(R"({"dim":1,"points":[["0"]],"multiplicities":[0]})"); }),
            ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_configuration(R"({"dim":1,"points":[["x"]]})"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_configuration(R"({"dim":1,"scalar":"complex","points":[["0"]]})"); }),
            ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_configuration(R"([1,2])"); }), ErrorKind::parse_error);
}

TEST(Parse, ErrorCarriesLineContext) {
  try {
    parse_configuration("{\"dim\":2,\n\"points\": [[\"0\",]]}");
    FAIL();
  } catch (const Error& e) {
    std::string m = e.what();
    EXPECT_NE(m.find("line 2"), std::string::npos) << m;
    EXPECT_NE(m.find("\"points\""), std::string::npos) << m;
  }
}

TEST(Serialize, RoundTripIsCanonical) {
  for (const char* text :
       {R"({"dim":2,"points":[["1/3","-2"],["0.5",1]],"multiplicities":[1,2]})",
        R"({"dim":3,"scalar":"float","points":[[0.1,0.2,0.30000000000000004],[1e-300,-5,7]]})"}) {
    auto once = parse_configuration(text);
    auto emitted = to_json(once).dump();
    auto twice = parse_configuration(emitted);
    EXPECT_EQ(once, twice);
    EXPECT_EQ(to_json(twice).dump(), emitted);
  }
}

TEST(Serialize, RationalsAsStrings) {
  auto j = to_json(parse_configuration(R"({"dim":1,"points":[["2/4"]]})"));
  EXPECT_EQ(j["points"][0][0], "1/2");
  EXPECT_EQ(j["scalar"], "rational");
}

TEST(Serialize, NormAndGraph) {
  auto n = norm_from_json<Q>(Json::parse(R"({"type":"gauge","vertices":[["1","0"],["-1","0"],["0","1"],["0","-1"]]})"));
  EXPECT_EQ(n.kind(), NormKind::gauge);
  EXPECT_EQ(to_json(n)["vertices"].size(), 4u);
  EXPECT_EQ(kind_of([] { norm_from_json<Q>(Json::parse(R"({"type":"gauge","vertices":[["1","0"],["0","1"],["-1","-1"]]})")); }),
            ErrorKind::invalid_body);
  EXPECT_EQ(kind_of([] { norm_from_json<Q>(Json::parse(R"({"type":"l3"})")); }), ErrorKind::parse_error);

  LabeledGraph g(4, {{0, 2}, {1, 3}}, GraphKind::diameter);
  g.set_diameter_key("2");
  auto j = to_json(g);
  EXPECT_EQ(j.dump(), R"({"n":4,"edges":[[0,2],[1,3]],"kind":"diameter","diameter_key":"2"})");
  auto back = graph_from_json(j);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.diameter_key(), "2");
}

TEST(Serialize, ReportWitness) {
  auto x = std::get<PointConfiguration<Q>>(parse_configuration(R"({"dim":2,"points":[[0,0],[1,0],[1,1],[0,1]]})"));
  auto r = to_json(is_k_diametral(x, Norm<Q>::euclidean(), 2));
  EXPECT_EQ(r["verdict"], false);
  EXPECT_EQ(r["witness"].size(), 2u);
  EXPECT_EQ(r["mode"], "exact");
  auto ok = to_json(is_k_diametral(x, Norm<Q>::euclidean(), 3));
  EXPECT_EQ(ok["witness"], Json::parse("[[0,2],[1,3]]"));
  EXPECT_EQ(ok["diameter_key"], "2");
}

TEST(Svg, PentagonWithCycle) {
  auto x = regular_polygon(5);
  auto svg = emit_svg(x, diameter_graph(x, Norm<double>::euclidean()));
  EXPECT_EQ(count(svg, "<circle"), 5u);
  EXPECT_EQ(count(svg, "<line"), 5u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 1u);
  EXPECT_EQ(svg, emit_svg(x, diameter_graph(x, Norm<double>::euclidean())));
}

TEST(Svg, BallTetrahedronSegment) {
  auto x = ball_tetrahedron_segment();
  auto svg = emit_svg(x, diameter_graph(x, Norm<double>::euclidean()));
  EXPECT_EQ(count(svg, "<circle"), 6u);
  EXPECT_EQ(count(svg, "<line"), 7u);
}

TEST(Svg, PointsOnlyAndDimensionErrors) {
  auto svg = emit_svg(regular_polygon(5));
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(kind_of([] { emit_svg(cube_config(4, 2)); }), ErrorKind::unsupported_dimension);
  EXPECT_EQ(kind_of([] { emit_svg(cube_config(1, 2)); }), ErrorKind::unsupported_dimension);
}
