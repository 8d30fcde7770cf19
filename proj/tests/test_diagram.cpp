#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "lamseifert/error.hpp"

using namespace lamseifert;

namespace {

bool has_violation(const TrainTrackDiagram& d, const std::string& code) {
  for (const auto& v : validate(d)) {
    if (v.invariant == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("reference files are valid") {
  for (const char* name : {"unknot", "trefoil", "figure_eight", "theta", "empty_cone"}) {
    CAPTURE(name);
    CHECK(validate(fixtures::load(name).diagram).empty());
  }
}

TEST_CASE("dangling crossing is reported by name") {
  const auto doc = io::parse_document_unchecked(io::read_file(fixtures::path("dangling_crossing")));
  CHECK(has_violation(doc.diagram, "dangling-crossing"));
  CHECK_THROWS_AS(io::parse_document(io::read_file(fixtures::path("dangling_crossing"))), Error);
}

TEST_CASE("structural violations") {
  TrainTrackDiagram theta = fixtures::load("theta").diagram;

  auto two_trunks = theta;
  two_trunks.switches[0].left = two_trunks.switches[0].trunk;
  CHECK_FALSE(validate(two_trunks).empty());

  auto bad_sign = fixtures::load("trefoil").diagram;
  bad_sign.crossings[0].sign = 2;
  CHECK(has_violation(bad_sign, "crossing-sign"));

  auto duplicate = theta;
  duplicate.segments[1].id = duplicate.segments[0].id;
  CHECK(has_violation(duplicate, "duplicate-id"));

  auto extra_marker = fixtures::load("unknot").diagram;
  extra_marker.markers.push_back(Marker{"m2"});
  CHECK_FALSE(validate(extra_marker).empty());
}

TEST_CASE("writhe of the reference knots") {
  const ScalarContext ctx;
  CHECK(writhe(fixtures::load("trefoil").diagram, fixtures::ones(1), ctx) == Scalar(3));
  CHECK(writhe(fixtures::load("figure_eight").diagram, fixtures::ones(1), ctx) == Scalar(0));
}

TEST_CASE("cycle basis spans the invariant space") {
  const auto theta = fixtures::load("theta").diagram;
  const auto cycles = cycle_basis(theta);
  CHECK(cycles.size() == 2);
  for (const auto& z : cycles) {
    for (const auto& x : z) CHECK((x == 0 || x == 1 || x == -1));
  }
}

TEST_CASE("serialization round-trips") {
  for (const char* name : {"trefoil", "theta", "figure_eight"}) {
    CAPTURE(name);
    const auto doc = fixtures::load(name);
    const std::string text = io::serialize(doc);
    const auto again = io::parse_document(text);
    CHECK(again.diagram == doc.diagram);
    CHECK(io::serialize(again) == text);
  }
}

TEST_CASE("builder output round-trips and validates") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto d = corpus::closure(2, corpus::random_word(rng, 2, 6));
    CHECK(validate(d).empty());
    CHECK(io::parse(io::serialize(d)) == d);
  }
}

TEST_CASE("malformed input") {
  auto kind_of = [](const std::string& text) {
    try {
      io::parse_document(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind_of("{") == ErrorKind::Syntax);
  CHECK(kind_of(R"({"ttd-version": 2, "switches": [], "segments": [], "markers": [], "crossings": []})") ==
        ErrorKind::Syntax);
  CHECK(kind_of(R"({"ttd-version": 1, "switches": [], "segments": [], "markers": []})") == ErrorKind::Syntax);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), Error);
}

TEST_CASE("weights by segment id") {
  const auto doc = fixtures::load("theta");
  const auto& ctx = doc.context;
  const auto w = io::weights_from_json(io::json::parse(R"({"x": 1, "xy": "1+sqrt2", "y": ["0", "1"]})"), doc.diagram, ctx);
  CHECK(w == *doc.weights);
  CHECK_THROWS_AS(io::weights_from_json(io::json::parse(R"({"x": 1})"), doc.diagram, ctx), Error);
  CHECK_THROWS_AS(io::weights_from_json(io::json::parse("[1, 2]"), doc.diagram, ctx), Error);
  CHECK_THROWS_AS(io::weights_from_json(io::json::parse("[1, 2.5, 1]"), doc.diagram, ctx), Error);
}
