#include <doctest.h>

#include "ocf/cayley.hpp"
#include "ocf/generators.hpp"
#include "ocf/oracle.hpp"
#include "ocf/rng.hpp"
#include "ocf/spectrum.hpp"

using namespace ocf;

TEST_SUITE("cayley") {

TEST_CASE("characters are eigenvectors, checked row by row") {
  BooleanFunction f = genAllNonzero(3);
  for (std::uint32_t a = 0; a < 8; ++a) CHECK(verifyEigenpair(f, a));

  Rng rng = makeRng(11);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 1 + static_cast<int>(rng() % 6);
    BooleanFunction g = genUniform(n, rng());
    for (std::uint32_t a = 0; a < g.size(); ++a) REQUIRE(verifyEigenpair(g, a));
  }

  CHECK_THROWS_AS(verifyEigenpair(BooleanFunction(13), 0), std::invalid_argument);
}

TEST_CASE("smallest eigenvalue examples") {
  CHECK(lambdaMin(genAllNonzero(2)) == -1);
  CHECK(lambdaMin(genAllOnes(4)) == 0);  // w = (16, 0, ..., 0)
  CHECK(lambdaMin(genZero(4)) == 0);
  // One side of a hyperplane reaches the regularity in absolute value.
  CHECK(lambdaMin(genHyperplaneSide(5, 0b1, 1)) == -16);
}

TEST_CASE("edge bound is tight on the full vertex set") {
  Rng rng = makeRng(22);
  for (int rep = 0; rep < 15; ++rep) {
    int n = 1 + static_cast<int>(rng() % 6);
    BooleanFunction f = genUniform(n, rng());
    std::vector<std::uint32_t> all(f.size());
    for (std::uint32_t v = 0; v < f.size(); ++v) all[v] = v;
    EdgeCountBoundResult r = edgeCountBound(f, all);
    CHECK(r.holds);
    // U = V: 2 e(V) = N d exactly, and the bound collapses to the same value.
    std::int64_t nd = static_cast<std::int64_t>(f.size()) * f.supportSize();
    CHECK(r.twiceEdgesInside == nd);
    CHECK(r.twiceBound == Dyadic(nd, 0));
  }
}

TEST_CASE("edge bound on random vertex subsets") {
  Rng rng = makeRng(33);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng() % 8);
    BooleanFunction f = genUniform(n, rng());
    std::vector<std::uint32_t> u;
    for (std::uint32_t v = 0; v < f.size(); ++v)
      if (rng() & 1) u.push_back(v);
    EdgeCountBoundResult r = edgeCountBound(f, u);
    CHECK(r.holds);
    CHECK(Dyadic(r.twiceEdgesInside, 0) >= r.twiceBound);
  }
  EdgeCountBoundResult empty = edgeCountBound(genAllOnes(3), {});
  CHECK(empty.holds);
  CHECK(empty.twiceEdgesInside == 0);
  CHECK(empty.twiceBound == Dyadic(0, 0));
}

TEST_CASE("edge bound rejects bad input") {
  CHECK_THROWS_AS(edgeCountBound(BooleanFunction(13), {0}), std::invalid_argument);
  CHECK_THROWS_AS(edgeCountBound(genAllOnes(3), {8}), std::invalid_argument);
}

TEST_CASE("bipartiteness distance examples") {
  // f == 1 on a single dimension: loops everywhere, best split still pays
  // half a loop per vertex: (0.5 * 2) / 4 = 1/4 = exactDistance / 2.
  CHECK(exactBipartitenessDistance(genAllOnes(1)).exact == Dyadic(1, 2));
  CHECK(exactDistance(genAllOnes(1)).exact == Dyadic(1, 1));

  BooleanFunction loop(1);
  loop.set(0, true);
  CHECK(exactBipartitenessDistance(loop).exact == Dyadic(1, 2));

  CHECK(exactBipartitenessDistance(genZero(3)).exact == Dyadic(0, 0));
  CHECK(exactBipartitenessDistance(genHyperplaneSide(4, 0b101, 1)).exact ==
        Dyadic(0, 0));
}

TEST_CASE("bipartiteness distance is exactly half the function distance") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t tables = 1ull << (1u << n);
    for (std::uint64_t idx = 0; idx < tables; ++idx) {
      BooleanFunction f(n, {idx});
      REQUIRE(exactBipartitenessDistance(f).exact == exactDistance(f).exact.half());
    }
  }
  Rng rng = makeRng(44);
  for (int rep = 0; rep < 40; ++rep) {
    BooleanFunction f = genUniform(4, rng());
    CHECK(exactBipartitenessDistance(f).exact == exactDistance(f).exact.half());
  }
  CHECK_THROWS_AS(exactBipartitenessDistance(BooleanFunction(5)),
                  std::invalid_argument);
}

TEST_CASE("sampling probes each pair at most once and the loop once") {
  BooleanFunction f = genUniform(8, 99);
  CountingOracle oracle(f);
  std::vector<std::uint32_t> verts = {3, 17, 3, 200, 17, 54};
  SampleGraph g = sampleInducedSubgraph(oracle, 8, verts);
  CHECK(g.vertices == verts);
  CHECK(oracle.queries() <= verts.size() * (verts.size() - 1) / 2 + 1);
  CHECK(g.selfLoop == f.value(0));
  // Duplicate sampled values are adjacent exactly when the graph has loops.
  CHECK(g.adjacent(0, 2) == f.value(0));
  CHECK(g.adjacent(1, 4) == f.value(0));
  CHECK(g.adjacent(0, 1) == f.value(3 ^ 17));
  CHECK(g.adjacent(1, 0) == g.adjacent(0, 1));

  CountingOracle lone(f);
  SampleGraph g1 = sampleInducedSubgraph(lone, 8, {42});
  CHECK(lone.queries() == 0);  // a single vertex asks nothing
  CHECK_FALSE(g1.selfLoop);

  CountingOracle none(f);
  sampleInducedSubgraph(none, 8, {});
  CHECK(none.queries() == 0);
}

TEST_CASE("odd cycle detection on handcrafted graphs") {
  // Triangle on XOR-closed values {1, 2, 3}.
  BooleanFunction tri = genAllNonzero(2);
  SampleGraph g = sampleInducedSubgraph([&](std::uint32_t x) { return tri.value(x); }, 2, {1, 2, 3});
  auto cyc = findOddCycle(g);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 3);
  CHECK(cycleToWitness(*cyc).validate(tri));

  // A 4-cycle alone is even: no odd cycle to find.
  BooleanFunction quad(3);
  quad.set(0b001, true);
  quad.set(0b010, true);
  SampleGraph g4 = sampleInducedSubgraph([&](std::uint32_t x) { return quad.value(x); }, 3, {0b000, 0b001, 0b011, 0b010});
  CHECK_FALSE(findOddCycle(g4).has_value());

  // The loop shows up as a duplicate sampled value.
  BooleanFunction loops(2);
  loops.set(0, true);
  SampleGraph gl = sampleInducedSubgraph([&](std::uint32_t x) { return loops.value(x); }, 2, {3, 3});
  auto c1 = findOddCycle(gl);
  REQUIRE(c1.has_value());
  CHECK(*c1 == std::vector<std::uint32_t>{3});
  OcfWitness w = cycleToWitness(*c1);
  CHECK(w.points == std::vector<std::uint32_t>{0});
  CHECK(w.validate(loops));
}

TEST_CASE("detected cycles always convert into valid witnesses") {
  Rng rng = makeRng(777);
  int hits = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + static_cast<int>(rng() % 7);
    BooleanFunction f = genUniform(n, rng());
    int k = 2 + static_cast<int>(rng() % 12);
    std::vector<std::uint32_t> verts(k);
    for (auto& v : verts) v = drawPoint(rng, n);
    SampleGraph g = sampleInducedSubgraph([&](std::uint32_t x) { return f.value(x); }, n, verts);
    auto cyc = findOddCycle(g);
    if (!cyc.has_value()) continue;
    ++hits;
    REQUIRE(cyc->size() % 2 == 1);
    OcfWitness w = cycleToWitness(*cyc);
    CHECK(w.k() == cyc->size());
    CHECK(w.validate(f));
  }
  CHECK(hits > 50);  // dense random functions produce odd cycles routinely
}

TEST_CASE("bipartite samples never report a cycle") {
  // Support on one hyperplane side keeps every sample 2-colorable.
  Rng rng = makeRng(888);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::uint32_t alpha = 0;
    while (alpha == 0) alpha = drawPoint(rng, n);
    BooleanFunction f = genHyperplaneSide(n, alpha, 1);
    int k = 2 + static_cast<int>(rng() % 20);
    std::vector<std::uint32_t> verts(k);
    for (auto& v : verts) v = drawPoint(rng, n);
    SampleGraph g = sampleInducedSubgraph([&](std::uint32_t x) { return f.value(x); }, n, verts);
    CHECK_FALSE(findOddCycle(g).has_value());
  }
}

}  // TEST_SUITE
