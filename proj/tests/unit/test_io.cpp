#include <gtest/gtest.h>

#include "bicomb/errors.hpp"
#include "bicomb/io.hpp"

using namespace bicomb;

TEST(SpaceJson, RoundTrip) {
  for (const char* text : {R"({"kind":"euclidean","dim":3})", R"({"kind":"star-seq","window":[-4,5]})",
                           R"({"kind":"tree","legs":3,"lengths":[1,2,0.5]})"}) {
    json j = json::parse(text);
    Space s = space_from_json(j);
    EXPECT_EQ(space_to_json(space_from_json(space_to_json(s))), space_to_json(s));
    EXPECT_EQ(space_to_json(s).at("kind"), j.at("kind"));
  }
  EXPECT_EQ(space_from_json(json::parse(R"({"kind":"tree","lengths":[1,1]})")).legs(), 2);
}

TEST(SpaceJson, Errors) {
  for (const char* text : {R"({"kind":"sphere"})", R"({"kind":"euclidean"})", R"({"kind":"euclidean","dim":0})",
                           R"({"kind":"tree","legs":2,"lengths":[1]})", R"({"kind":"tree","lengths":[1,-1]})",
                           R"({"kind":"star-seq","window":[1]})", R"([1,2])"})
    EXPECT_THROW(space_from_json(json::parse(text)), ParseError) << text;
}

TEST(SpaceJson, ExtraIsometries) {
  Space s = space_from_json(json::parse(
      R"({"kind":"euclidean","dim":2,"isometries":{"quarter":{"kind":"rotation","turns":"1/4"}}})"));
  EXPECT_NO_THROW(s.isometry("quarter"));
  EXPECT_THROW(space_from_json(json::parse(R"({"kind":"euclidean","dim":2,"isometries":{"bad":{"kind":"shift"}}})")),
               ParseError);
}

TEST(PointJson, RoundTrip) {
  Space e = Space::euclidean(2), q = Space::star_seq(), t = Space::tree({1, 1});
  Rng rng(1);
  for (const Space* s : {&e, &q, &t}) {
    for (int i = 0; i < 200; ++i) {
      Point p = s->random_point(rng);
      EXPECT_EQ(point_from_json(*s, point_to_json(p)), p);
      EXPECT_EQ(point_from_json(*s, json::parse(point_to_json(p).dump())), p);
    }
  }
  EXPECT_EQ(point_from_json(e, json::parse("[1.5, -2]")), (Point{EuclidPoint{{1.5, -2}}}));
  EXPECT_EQ(point_from_json(q, json::parse(R"({"entries":[[2,"1/3"],[0,1]]})")),
            (Point{SparseSeq::from_entries({{0, Rational(1)}, {2, Rational(1, 3)}})}));
  EXPECT_EQ(point_from_json(t, json::parse(R"({"leg":1,"r":0})")), (Point{TreePoint{0, 0}}));
}

TEST(PointJson, Errors) {
  Space e = Space::euclidean(2), q = Space::star_seq(), t = Space::tree({1, 1});
  EXPECT_THROW(point_from_json(e, json::parse("[1]")), ParseError);
  EXPECT_THROW(point_from_json(e, json::parse(R"(["a", 1])")), ParseError);
  EXPECT_THROW(point_from_json(q, json::parse(R"({"entries":[[0,"1/0"]]})")), ParseError);
  EXPECT_THROW(point_from_json(q, json::parse(R"({"entries":[[0,1],[0,2]]})")), ParseError);
  EXPECT_THROW(point_from_json(t, json::parse(R"({"leg":2,"r":0.5})")), ParseError);
  EXPECT_THROW(point_from_json(t, json::parse(R"({"leg":0,"r":1.5})")), ParseError);
}

TEST(IsometryJson, RoundTrip) {
  Space e = Space::euclidean(2);
  for (const char* text : {R"({"kind":"rotation","turns":"1/3"})", R"({"kind":"rotation","angle":0.25})",
                           R"({"kind":"translation","vector":[1,0]})", R"({"kind":"identity"})",
                           R"({"kind":"composition","parts":[{"kind":"rotation","turns":"1/4"},{"kind":"identity"}]})"}) {
    json j = json::parse(text);
    EXPECT_EQ(isometry_to_json(isometry_from_json(e, j)), j) << text;
  }
  Space q = Space::star_seq();
  EXPECT_EQ(isometry_to_json(isometry_from_json(q, json::parse(R"("shift")"))),
            json::parse(R"({"kind":"shift","power":1})"));
  EXPECT_THROW(isometry_from_json(q, json::parse(R"({"kind":"rotation","turns":"1/3"})")), ParseError);
  EXPECT_THROW(isometry_from_json(q, json::parse(R"("rotate-1/3")")), ParseError);
}

TEST(MeasureJson, RoundTrip) {
  json j = json::parse(R"({"space":{"kind":"euclidean","dim":1},
    "atoms":[{"point":[0],"mass":"1/3"},{"point":[3],"mass":"2/3"}]})");
  AtomicMeasure mu = measure_from_json(j);
  EXPECT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.atoms()[1].mass, Rational(2, 3));
  EXPECT_EQ(measure_to_json(measure_from_json(measure_to_json(mu))), measure_to_json(mu));
}

TEST(MeasureJson, Errors) {
  Space s = Space::euclidean(1);
  EXPECT_THROW(measure_from_json(s, json::parse(R"({"atoms":[{"point":[0],"mass":"1/2"}]})")), ParseError);
  EXPECT_THROW(measure_from_json(s, json::parse(R"({"atoms":[{"point":[0],"mass":"-1/2"},{"point":[1],"mass":"3/2"}]})")),
               ParseError);
  EXPECT_THROW(measure_from_json(s, json::parse(R"({"atoms":[]})")), ParseError);
  EXPECT_THROW(measure_from_json(json::parse(R"({"atoms":[{"point":[0],"mass":"1"}]})")), ParseError);
}

TEST(MeasureJson, CollidingAtomsMerge) {
  Space s = Space::star_seq();
  AtomicMeasure mu = measure_from_json(
      s, json::parse(R"({"atoms":[{"point":{"entries":[[0,"1/2"]]},"mass":"1/4"},
                                  {"point":{"entries":[[0,"2/4"]]},"mass":"3/4"}]})"));
  ASSERT_EQ(mu.size(), 1u);
  EXPECT_EQ(mu.atoms()[0].mass, 1);
}

TEST(TargetJson, RoundTrip) {
  Space e = Space::euclidean(2);
  for (const char* text : {R"({"kind":"ball","center":{"coords":[0,0]},"radius":1.0})",
                           R"({"kind":"points","points":[{"coords":[1,0]}],"tol":1e-9})"}) {
    json j = json::parse(text);
    EXPECT_EQ(target_to_json(target_from_json(e, j)), j) << text;
  }
  EXPECT_THROW(target_from_json(e, json::parse(R"({"kind":"ball","center":[0,0],"radius":-1})")), ParseError);
  EXPECT_THROW(target_from_json(e, json::parse(R"({"kind":"points","points":[]})")), ParseError);
}

TEST(RationalJson, Forms) {
  EXPECT_EQ(rational_from_json(json("2/6")), Rational(1, 3));
  EXPECT_EQ(rational_from_json(json(3)), Rational(3));
  EXPECT_EQ(rational_from_json(json(0.25)), Rational(1, 4));
  EXPECT_THROW(rational_from_json(json::array()), ParseError);
}
