#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ocf/analysis.hpp"
#include "ocf/boolean_function.hpp"
#include "ocf/dyadic.hpp"
#include "ocf/witness.hpp"

#include <json.hpp>

namespace ocf {

// The graph on V = F2^n with u ~ v iff f(u ^ v) = 1. It is |supp(f)|-regular;
// f(0) = 1 puts a loop on every vertex. Its adjacency spectrum is exactly
// {w[alpha]} with the characters as eigenvectors, loops included.

// Checks A*chi_alpha = w[alpha]*chi_alpha row by row, summing f over each
// row's support directly (no Fourier transform involved). n <= 12.
bool verifyEigenpair(const BooleanFunction& f, std::uint32_t alpha);

// Smallest adjacency eigenvalue = min_alpha w[alpha], as an integer.
std::int32_t lambdaMin(const BooleanFunction& f);

struct EdgeCountBoundResult {
  // e(U) counts unordered adjacent pairs inside U plus half a unit per loop;
  // doubled here to stay integral.
  std::int64_t twiceEdgesInside = 0;
  // Lower bound (|U| / 2N) * (|U| d + lambdaMin (N - |U|)), doubled, as an
  // exact dyadic.
  Dyadic twiceBound;
  bool holds = false;
};

// Verifies the quadratic-form bound on edges inside U. n <= 12.
EdgeCountBoundResult edgeCountBound(const BooleanFunction& f,
                                    const std::vector<std::uint32_t>& u);

// Minimum over bipartitions (U, V\U) of the violation mass
// (edges inside U + edges inside V\U, loops half each) / N^2, found by brute
// force with vertex 0 pinned to one side. n <= 4. Equals exactDistance(f)/2
// on every input.
DistanceValue exactBipartitenessDistance(const BooleanFunction& f);

// Induced subgraph on k sampled vertex values. Adjacency uses exactly one
// oracle query per unordered pair of sample positions; f(0) is queried once
// more (as the shared loop flag) whenever k >= 2, so a sampling round costs
// C(k,2) + 1 distinct-point queries at most.
struct SampleGraph {
  int n = 0;
  std::vector<std::uint32_t> vertices;
  bool selfLoop = false;  // f(0); false when never probed (k < 2)
  std::vector<std::uint64_t> adjacency;  // k rows of rowWords() words each
  std::size_t rowWords() const { return (vertices.size() + 63) / 64; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (adjacency[i * rowWords() + (j >> 6)] >> (j & 63)) & 1ull;
  }

  nlohmann::json toJson() const;
};

template <typename Oracle>
SampleGraph sampleInducedSubgraph(Oracle&& f, int n, const std::vector<std::uint32_t>& vertices) {
  SampleGraph g;
  g.n = n;
  g.vertices = vertices;
  std::size_t k = vertices.size();
  g.adjacency.assign(k * ((k + 63) / 64), 0);
  if (k >= 2) g.selfLoop = f(0);
  std::size_t stride = g.rowWords();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::uint32_t d = vertices[i] ^ vertices[j];
      // Repeated values reuse the loop flag instead of a fresh query.
      bool adj = d == 0 ? g.selfLoop : f(d);
      if (adj) {
        g.adjacency[i * stride + (j >> 6)] |= 1ull << (j & 63);
        g.adjacency[j * stride + (i >> 6)] |= 1ull << (i & 63);
      }
    }
  }
  return g;
}

// Odd cycle in the sample, as the cyclic vertex-value sequence:
//  * a repeated sampled value whose positions are adjacent as a pair is only
//    possible when f(0) = 1, and yields the 1-cycle (v);
//  * otherwise a breadth-first 2-coloring (components rooted at their lowest
//    index, neighbors scanned in ascending index) either succeeds, proving
//    the sample bipartite, or produces an odd closed walk through the first
//    conflicting edge.
// Consecutive XOR differences of the returned sequence all lie in supp(f)
// and XOR to zero, so they convert directly into an OcfWitness.
std::optional<std::vector<std::uint32_t>> findOddCycle(const SampleGraph& g);

// Differences (a2^a1, a3^a2, ..., a1^am) of a cycle value sequence.
OcfWitness cycleToWitness(const std::vector<std::uint32_t>& cycle);

}  // namespace ocf
