#include "ocf/cayley.hpp"

#include <algorithm>

#include "ocf/bits.hpp"
#include "ocf/function_io.hpp"
#include "ocf/spectrum.hpp"

namespace ocf {

bool verifyEigenpair(const BooleanFunction& f, std::uint32_t alpha) {
  checkDimension(f.n(), 12, "verifyEigenpair");
  std::vector<std::uint32_t> supp = f.supportPoints();
  // Row u of A*chi_alpha is sum over s in supp of chi_alpha(u ^ s); the
  // claimed eigenvalue w[alpha] is recomputed here as the row sum at u = 0,
  // so the check never touches the transform code.
  std::int64_t lambda = 0;
  for (std::uint32_t s : supp) lambda += dot(alpha, s) ? -1 : 1;
  std::uint32_t size = f.size();
  for (std::uint32_t u = 0; u < size; ++u) {
    std::int64_t row = 0;
    for (std::uint32_t s : supp) {
      std::uint32_t v = u ^ s;
      row += dot(alpha, v) ? -1 : 1;
    }
    std::int64_t expect = (dot(alpha, u) ? -1 : 1) * lambda;
    if (row != expect) return false;
  }
  return true;
}

std::int32_t lambdaMin(const BooleanFunction& f) { return wht(f).minW(); }

EdgeCountBoundResult edgeCountBound(const BooleanFunction& f,
                                    const std::vector<std::uint32_t>& u) {
  checkDimension(f.n(), 12, "edgeCountBound");
  EdgeCountBoundResult r;
  std::int64_t size = f.size();

  std::vector<std::uint64_t> inU((f.size() + 63) / 64 + 1, 0);
  std::int64_t cardU = 0;
  for (std::uint32_t x : u) {
    if (x >= f.size()) {
      throw std::invalid_argument("edgeCountBound: vertex outside F2^n");
    }
    std::uint64_t bit = 1ull << (x & 63);
    if (!(inU[x >> 6] & bit)) {
      inU[x >> 6] |= bit;
      ++cardU;
    }
  }

  // Quadratic-form edge count e(U) = (1/2) 1_U^T A 1_U: unordered pairs once,
  // loops half each; doubled to stay integral.
  std::int64_t twice = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (!((inU[x >> 6] >> (x & 63)) & 1ull)) continue;
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      if (!((inU[y >> 6] >> (y & 63)) & 1ull)) continue;
      if (f.value(x ^ y)) ++twice;  // ordered pairs, loops once
    }
  }
  r.twiceEdgesInside = twice;

  std::int64_t d = f.supportSize();
  std::int64_t lmin = lambdaMin(f);
  // 2 * e(U) >= (|U| / N) * (|U| d + lambda_min (N - |U|)).
  __int128 num = static_cast<__int128>(cardU) * (cardU * d + lmin * (size - cardU));
  r.twiceBound = Dyadic(num, f.n());
  r.holds = Dyadic(twice, 0) >= r.twiceBound;
  return r;
}

DistanceValue exactBipartitenessDistance(const BooleanFunction& f) {
  checkDimension(f.n(), 4, "exactBipartitenessDistance");
  std::uint32_t size = f.size();
  std::uint64_t loops = f.value(0) ? size : 0;

  // Adjacency rows as bitmasks over the <= 16 vertices (proper edges only;
  // loops are handled separately since their bipartition charge, half a unit
  // each, is side-independent).
  std::vector<std::uint32_t> adj(size, 0);
  for (std::uint32_t x = 0; x < size; ++x) {
    for (std::uint32_t y = 0; y < size; ++y) {
      if (x != y && f.value(x ^ y)) adj[x] |= 1u << y;
    }
  }

  // v counts ordered adjacent pairs lying on one side of the current
  // bipartition (S, complement); vertex 0 stays in the complement. Gray-code
  // sweep: flipping one vertex changes v by twice its pair counts against
  // the two sides.
  std::uint32_t fullMask = (1u << size) - 1;
  std::uint32_t mask = 0;  // current S, subset of vertices {1..size-1}
  std::uint64_t v = 0;
  for (std::uint32_t x = 0; x < size; ++x) v += std::popcount(adj[x]);
  std::uint64_t bestV = v;
  std::uint32_t steps = 1u << (size - 1);
  for (std::uint32_t g = 1; g < steps; ++g) {
    std::uint32_t vert = std::countr_zero(g) + 1;
    std::uint32_t bit = 1u << vert;
    std::uint64_t withS = std::popcount(adj[vert] & mask & ~bit);
    std::uint64_t withOther = std::popcount(adj[vert] & fullMask & ~mask & ~bit);
    if (!(mask & bit)) {
      v += 2 * withS;
      v -= 2 * withOther;
      mask |= bit;
    } else {
      v += 2 * withOther;
      v -= 2 * withS;
      mask &= ~bit;
    }
    if (v < bestV) bestV = v;
  }

  // Unordered violating pairs are bestV / 2, plus half a unit per loop;
  // normalized by N^2: (bestV / 2 + loops / 2) / N^2 = (bestV + loops) / 2^(2n+1).
  return {Dyadic(static_cast<std::int64_t>(bestV + loops), 2 * f.n() + 1)};
}

nlohmann::json SampleGraph::toJson() const {
  nlohmann::json verts = nlohmann::json::array();
  for (std::uint32_t v : vertices) verts.push_back(pointToBinary(v, n));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string row(vertices.size(), '0');
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (adjacent(i, j)) row[j] = '1';
    }
    rows.push_back(row);
  }
  return nlohmann::json{
      {"n", n}, {"k", vertices.size()}, {"selfLoop", selfLoop},
      {"vertices", verts}, {"adjacency", rows}};
}

std::optional<std::vector<std::uint32_t>> findOddCycle(const SampleGraph& g) {
  std::size_t k = g.vertices.size();
  // Adjacent repeated values: the loop at that value closes a 1-cycle.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.vertices[i] == g.vertices[j] && g.adjacent(i, j)) {
        return std::vector<std::uint32_t>{g.vertices[i]};
      }
    }
  }

  // 2-color by BFS, components rooted at their lowest unvisited index,
  // neighbors in ascending index: deterministic for a given sample.
  std::vector<int> color(k, -1);
  std::vector<std::size_t> parent(k, SIZE_MAX);
  std::vector<std::size_t> order;
  order.reserve(k);
  for (std::size_t root = 0; root < k; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    order.clear();
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::size_t u = order[head];
      for (std::size_t w = 0; w < k; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          parent[w] = u;
          order.push_back(w);
        } else if (color[w] == color[u] && w != u) {
          // Odd closed walk: u's tree path to the lowest common ancestor,
          // then back down to w, closed by the conflict edge (u, w).
          std::vector<std::size_t> pu{u}, pw{w};
          while (pu.back() != root) pu.push_back(parent[pu.back()]);
          while (pw.back() != root) pw.push_back(parent[pw.back()]);
          // Trim the shared tail above the LCA.
          while (pu.size() >= 2 && pw.size() >= 2 &&
                 pu[pu.size() - 2] == pw[pw.size() - 2]) {
            pu.pop_back();
            pw.pop_back();
          }
          std::vector<std::uint32_t> cycle;
          for (std::size_t idx : pu) cycle.push_back(g.vertices[idx]);
          for (std::size_t t = pw.size() - 1; t-- > 0;) {
            cycle.push_back(g.vertices[pw[t]]);
          }
          return cycle;
        }
      }
    }
  }
  return std::nullopt;
}

OcfWitness cycleToWitness(const std::vector<std::uint32_t>& cycle) {
  OcfWitness w;
  std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    w.points.push_back(cycle[(i + 1) % m] ^ cycle[i]);
  }
  return w;
}

}  // namespace ocf
