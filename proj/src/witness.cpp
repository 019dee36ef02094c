#include "ocf/witness.hpp"

#include <algorithm>
#include <queue>

#include "ocf/bits.hpp"
#include "ocf/function_io.hpp"

namespace ocf {

bool OcfWitness::validate(const BooleanFunction& f) const {
  if (points.empty() || points.size() % 2 == 0) return false;
  std::uint32_t acc = 0;
  for (std::uint32_t p : points) {
    if (p >= f.size() || !f.value(p)) return false;
    acc ^= p;
  }
  return acc == 0;
}

nlohmann::json OcfWitness::toJson(int n) const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::uint32_t p : points) arr.push_back(pointToBinary(p, n));
  return nlohmann::json{{"k", points.size()}, {"points", arr}};
}

std::optional<OcfWitness> shortestOddWitnessUnchecked(const BooleanFunction& f, int maxN) {
  checkDimension(f.n(), maxN, "shortestOddWitness");
  if (f.value(0)) return OcfWitness{{0}};
  std::vector<std::uint32_t> supp = f.supportPoints();
  if (supp.empty()) return std::nullopt;

  // State (x, parity) packed as x*2 + parity, explored breadth first from
  // (0, 0) by moves x -> x ^ s, s in supp. A witness of odd length m is a
  // walk returning to 0 after m moves, i.e. a state (v, even) with
  // f(v) = 1 at depth m-1 plus the closing move v. Closure is tested the
  // moment a state is generated, so dense instances exit before paying for
  // a full level expansion; the first closure found is minimal because
  // levels are generated in depth order.
  std::uint32_t size = f.size();
  std::vector<std::uint32_t> parentMove(static_cast<std::size_t>(size) * 2, 0xffffffffu);
  std::vector<std::uint32_t> frontier{0};  // state ids
  parentMove[0] = 0xfffffffeu;             // visited marker for the root
  auto emit = [&](std::uint32_t closingState, std::uint32_t lastMove) {
    OcfWitness w;
    w.points.push_back(lastMove);
    std::uint32_t s = closingState;
    while (s != 0) {
      std::uint32_t mv = parentMove[s];
      w.points.push_back(mv);
      s = (s ^ (mv << 1)) ^ 1u;  // undo: x ^= mv, parity flips
    }
    std::reverse(w.points.begin(), w.points.end());
    return w;
  };

  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t state : frontier) {
      std::uint32_t x = state >> 1;
      std::uint32_t parity = state & 1;
      for (std::uint32_t s : supp) {
        std::uint32_t nx = x ^ s;
        std::uint32_t ns = (nx << 1) | (parity ^ 1u);
        if (parentMove[ns] != 0xffffffffu) continue;
        parentMove[ns] = s;
        if ((ns & 1u) == 0 && nx != 0 && f.value(nx)) {
          return emit(ns, nx);
        }
        next.push_back(ns);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<OcfWitness> shortestOddWitness(const BooleanFunction& f) {
  return shortestOddWitnessUnchecked(f, 20);
}

std::optional<int> minimalOddWitnessLengthUpTo5(const BooleanFunction& f) {
  if (f.value(0)) return 1;
  std::vector<std::uint32_t> supp = f.supportPoints();
  // k = 3: x ^ y in supp for some support pair. Repeats cannot help when
  // f(0) = 0, since x ^ x = 0 is outside the support.
  for (std::size_t i = 0; i < supp.size(); ++i) {
    for (std::size_t j = i + 1; j < supp.size(); ++j) {
      if (f.value(supp[i] ^ supp[j])) return 3;
    }
  }
  // k = 5: some support triple XORs to a pairwise support XOR. Any multiset
  // certificate with a repeated point would reduce to a 3-witness, which was
  // just ruled out, so a hit here is genuinely minimal.
  std::vector<bool> pairXor(f.size(), false);
  for (std::size_t i = 0; i < supp.size(); ++i) {
    for (std::size_t j = i + 1; j < supp.size(); ++j) {
      pairXor[supp[i] ^ supp[j]] = true;
    }
  }
  for (std::size_t i = 0; i < supp.size(); ++i) {
    for (std::size_t j = i + 1; j < supp.size(); ++j) {
      std::uint32_t xy = supp[i] ^ supp[j];
      for (std::size_t l = j + 1; l < supp.size(); ++l) {
        if (pairXor[xy ^ supp[l]]) return 5;
      }
    }
  }
  return std::nullopt;
}

}  // namespace ocf
