#pragma once

#include <optional>
#include <set>
#include <vector>

#include "numsemi/base.hpp"
#include "numsemi/semigroup.hpp"

namespace numsemi {

struct BgSearchResult {
  Int bound = 0;
  std::optional<Int> best_colength;
  std::optional<std::vector<Int>> witness;
};

namespace detail {

inline bool gorenstein_node(const NumericalSemigroup& S) {
  if (S.is_full()) return true;
  return S.is_symmetric();
}

/// Generators of S minus one minimal generator g: every element of the new
/// semigroup up to its Frobenius number plus its multiplicity.
inline std::vector<Int> drop_generator(const NumericalSemigroup& S, Int g) {
  const Int frob = std::max(S.frobenius(), g);
  Int mult = S.multiplicity();
  if (g == mult) {
    Int x = mult + 1;
    while (!S.contains(x)) ++x;
    mult = x;
  }
  std::vector<Int> gens;
  for (Int x = 1; x <= frob + mult + 1; ++x) {
    if (x != g && S.contains(x)) gens.push_back(x);
  }
  return gens;
}

}  // namespace detail

/// Breadth-first search over subsemigroups of H (each step removes one
/// minimal generator) for a Gorenstein subsemigroup, up to colength `bound`.
/// Returns the least colength found and its witness, if any.
inline BgSearchResult bg_upper_bound(const SemigroupPtr& H, Int bound) {
  BgSearchResult result;
  result.bound = bound;
  if (detail::gorenstein_node(*H)) {
    result.best_colength = 0;
    result.witness = H->minimal_generators();
    return result;
  }
  std::set<std::vector<Int>> visited{H->minimal_generators()};
  std::vector<NumericalSemigroup> frontier{*H};
  for (Int depth = 1; depth <= bound; ++depth) {
    std::vector<NumericalSemigroup> next;
    for (const auto& node : frontier) {
      for (Int g : node.minimal_generators()) {
        NumericalSemigroup child(detail::drop_generator(node, g));
        if (!visited.insert(child.minimal_generators()).second) continue;
        if (detail::gorenstein_node(child)) {
          result.best_colength = depth;
          result.witness = child.minimal_generators();
          return result;
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace numsemi
