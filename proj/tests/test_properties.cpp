#include <doctest.h>

#include "corpus.hpp"
#include "lamseifert/homology.hpp"
#include "lamseifert/seifert.hpp"
#include "lamseifert/weights.hpp"
#include "oracles.hpp"

using namespace lamseifert;

namespace {

const std::vector<corpus::Sample>& rational_corpus() {
  static const auto samples = corpus::make_corpus(120, 20261016, false);
  return samples;
}

const std::vector<corpus::Sample>& integer_corpus() {
  static const auto samples = corpus::make_corpus(40, 7, true);
  return samples;
}

}  // namespace

TEST_CASE("corpus diagrams are valid and weights invariant") {
  for (const auto& s : rational_corpus()) {
    CAPTURE(s.name);
    CHECK(validate(s.diagram).empty());
    CHECK(is_invariant(s.diagram, s.weights));
  }
}

TEST_CASE("seifert output bounds and conserves measure") {
  const ScalarContext ctx;
  for (const auto& s : rational_corpus()) {
    CAPTURE(s.name);
    const SeifertRun r = run(s.diagram, s.weights, ctx);
    CHECK(homology::verify(s.diagram, s.weights, r.params.twists).valid);
    CHECK(measure_defects(s.diagram, s.weights, r).empty());
  }
}

TEST_CASE("integer weights give integer twists and sectors") {
  const ScalarContext ctx;
  for (const auto& s : integer_corpus()) {
    CAPTURE(s.name);
    const SeifertRun r = run(s.diagram, s.weights, ctx);
    CHECK(oracles::all_integer(r.params.twists));
    CHECK(oracles::all_integer(r.lamination.sector_weights));
  }
}

TEST_CASE("twist is homogeneous of degree one") {
  const ScalarContext ctx;
  const Rational lambda(5, 3);
  for (const auto& s : integer_corpus()) {
    CAPTURE(s.name);
    ScalarVector scaled = s.weights;
    for (auto& x : scaled) x *= lambda;
    const SeifertRun a = run(s.diagram, s.weights, ctx);
    const SeifertRun b = run(s.diagram, scaled, ctx);
    REQUIRE(a.lamination.decomposition.families.size() == b.lamination.decomposition.families.size());
    for (std::size_t i = 0; i < a.params.twists.size(); ++i) CHECK(b.params.twists[i] == a.params.twists[i] * lambda);
    for (std::size_t i = 0; i < a.lamination.decomposition.families.size(); ++i) {
      CHECK(b.lamination.decomposition.families[i].itinerary == a.lamination.decomposition.families[i].itinerary);
    }
  }
}

TEST_CASE("linking matrix matches the brute-force count") {
  for (const auto& s : rational_corpus()) {
    CAPTURE(s.name);
    const auto cs = homology::cell_structure(s.diagram);
    const auto l = homology::linking_matrix(s.diagram, cs);
    const std::size_t k = cs.k();
    for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
      Scalar implemented;
      for (std::size_t i = 0; i < k; ++i) implemented += s.weights[i] * l(j, i);
      CHECK(implemented == oracles::brute_force_linking(s.diagram, cs.cycles[j], s.weights));
    }
  }
}

TEST_CASE("classical diagrams split into their Seifert circles") {
  const ScalarContext ctx;
  std::size_t checked = 0;
  for (const auto& s : integer_corpus()) {
    if (!s.diagram.switches.empty()) continue;
    CAPTURE(s.name);
    const ScalarVector w(s.diagram.segments.size(), Scalar(1));
    const SeifertRun r = run(s.diagram, w, ctx);
    CHECK(r.lamination.decomposition.families.size() == oracles::seifert_circle_count(s.diagram));
    Scalar t;
    for (const auto& x : r.params.twists) t += x;
    CHECK(t == -writhe(s.diagram, w, ctx));
    ++checked;
  }
  CHECK(checked >= 3);
}

TEST_CASE("twist space dimension equals vertices minus components") {
  for (const auto& s : rational_corpus()) {
    CAPTURE(s.name);
    const auto space = homology::valid_twist_space(s.diagram, s.weights);
    CHECK(invariant_space(s.diagram).dimension == oracles::cycle_rank(s.diagram));
    CHECK(space.dimension == s.diagram.segments.size() - oracles::cycle_rank(s.diagram));
    REQUIRE(space.particular);
    CHECK(homology::verify(s.diagram, s.weights, *space.particular).valid);
  }
}
