#include <doctest.h>

#include <algorithm>
#include <random>

#include "lambda2/smith.hpp"
#include "lambda2/spectral.hpp"

using namespace lambda2;

namespace {

Graph relabel(const Graph& g, std::mt19937& rng) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("catalog builders") {
  CHECK(build(SmithForm{SmithForm::Kind::cycle, 4}) == cycle_graph(4));
  CHECK(build(SmithForm{SmithForm::Kind::double_broom, 1}) == star_graph(4));
  Graph e8 = build(SmithForm{SmithForm::Kind::spider_125, 0});
  CHECK(e8.vertex_count() == 9);
  CHECK(build(DynkinForm{DynkinForm::Kind::broom, 4}) == star_graph(3));
  CHECK_THROWS_AS(build(SmithForm{SmithForm::Kind::cycle, 2}), std::invalid_argument);
}

TEST_CASE("index-2 catalog members sit exactly at 2, proper pieces below") {
  BoundConstant two = named_bound("two");
  for (const SmithForm& f : smith_forms_up_to(14)) {
    SpectralPosition sp = spectral_position(build(f), two);
    CHECK(sp.count_above == 0);
    CHECK(sp.multiplicity == 1);
  }
  for (const DynkinForm& f : dynkin_forms_up_to(14)) {
    SpectralPosition sp = spectral_position(build(f), two);
    CHECK(sp.count_above == 0);
    CHECK(sp.multiplicity == 0);
  }
}

TEST_CASE("recognition round-trips under relabeling") {
  std::mt19937 rng(7);
  for (const SmithForm& f : smith_forms_up_to(13)) {
    Graph g = build(f);
    auto direct = recognize_smith(g);
    REQUIRE(direct.has_value());
    CHECK(*direct == f);
    for (int iter = 0; iter < 3; ++iter) {
      auto got = recognize_smith(relabel(g, rng));
      REQUIRE(got.has_value());
      CHECK(*got == f);
    }
  }
}

TEST_CASE("recognition rejects non-members") {
  CHECK(!recognize_smith(path_graph(6)).has_value());
  CHECK(!recognize_smith(complete_graph(4)).has_value());
  CHECK(!recognize_smith(star_graph(5)).has_value());
  CHECK(!recognize_smith(spider_graph(2, 2, 3)).has_value());
  CHECK(!recognize_smith(spider_graph(1, 2, 4)).has_value());
  CHECK_THROWS_AS(recognize_smith(Graph::from_edges(2, {})), std::invalid_argument);
}

TEST_CASE("index_vs_2") {
  CHECK(index_vs_2(path_graph(10)) == IndexVsTwo::sub_smith);
  CHECK(index_vs_2(cycle_graph(7)) == IndexVsTwo::smith);
  CHECK(index_vs_2(complete_graph(4)) == IndexVsTwo::super_smith);
  CHECK(index_vs_2(star_graph(4)) == IndexVsTwo::smith);
  CHECK(index_vs_2(star_graph(5)) == IndexVsTwo::super_smith);
}

TEST_CASE("deleting any vertex of an index-2 member leaves only sub-2 pieces") {
  for (const SmithForm& f : smith_forms_up_to(10)) {
    Graph g = build(f);
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (const auto& part : remove_vertex_split(g, v).parts)
        CHECK(index_vs_2(part.graph) == IndexVsTwo::sub_smith);
    }
  }
}

TEST_CASE("exactly two sub-2 catalog members have index sqrt3") {
  BoundConstant s3 = named_bound("sqrt3");
  std::vector<DynkinForm> hits;
  for (const DynkinForm& f : dynkin_forms_up_to(12)) {
    SpectralPosition sp = spectral_position(build(f), s3);
    if (sp.count_above == 0 && sp.multiplicity == 1) hits.push_back(f);
  }
  REQUIRE(hits.size() == 2);
  CHECK(hits[0] == DynkinForm{DynkinForm::Kind::path, 5});
  CHECK(hits[1] == DynkinForm{DynkinForm::Kind::broom, 4});
  CHECK(build(hits[1]) == star_graph(3));
}
