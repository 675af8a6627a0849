#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <utility>
#include <vector>

#include "numsemi/base.hpp"
#include "numsemi/ideal.hpp"
#include "numsemi/semigroup.hpp"

namespace numsemi {

/// Structure data of a minimally 3-generated non-symmetric semigroup: the
/// defining matrix exponents, relation degrees c_i, syzygy degrees d_i and
/// the two maximal-ideal degrees of the canonical presentation.
struct HerzogData {
  std::array<Int, 3> ordering{};  // a1, a2, a3 after normalization
  Int alpha = 0, beta = 0, gamma = 0;
  Int alpha_prime = 0, beta_prime = 0, gamma_prime = 0;
  std::array<Int, 3> c{};
  std::array<Int, 3> d{};
  Int m_deg = 0;
  Int n_deg = 0;
};

namespace detail {

inline bool in_two_generated(Int v, Int p, Int q) {
  for (Int x = 0; x * p <= v; ++x) {
    if ((v - x * p) % q == 0) return true;
  }
  return false;
}

inline Int least_multiple_in(Int a, Int p, Int q) {
  const Int limit = std::max(checked_mul(p, q) / a, std::max(p, q)) + 1;
  for (Int k = 1; k <= limit; ++k) {
    if (in_two_generated(checked_mul(k, a), p, q)) return k;
  }
  throw InternalInconsistency("no multiple falls in the complementary semigroup");
}

/// The unique (x, y), x in [1, x_hi), y >= 1, with x*p + y*q = v.
inline std::pair<Int, Int> positive_representation(Int v, Int p, Int q, Int x_hi) {
  std::pair<Int, Int> found{0, 0};
  int count = 0;
  for (Int x = 1; x < x_hi && x * p < v; ++x) {
    const Int rest = v - x * p;
    if (rest % q == 0) {
      ++count;
      if (count > 1) {
        fail(Errc::ambiguous_representation,
             "positive representation of " + std::to_string(v) + " is not unique");
      }
      found = {x, rest / q};
    }
  }
  internal_check(count == 1, "positive representation missing");
  return found;
}

}  // namespace detail

/// Computes the structure matrix, trying generator orderings in lexicographic
/// order and returning the first whose a1*alpha attains the minimum of the six
/// matrix entry degrees.
inline HerzogData structure_matrix(const SemigroupPtr& Hp) {
  const auto& H = *Hp;
  if (H.embedding_dimension() != 3) {
    fail(Errc::not_three_generated, "semigroup is not minimally 3-generated");
  }
  if (H.is_symmetric()) {
    fail(Errc::symmetric_semigroup, "structure matrix needs a non-symmetric semigroup");
  }
  internal_check(H.type() == 2, "non-symmetric 3-generated semigroup must have type 2");

  const auto& g = H.minimal_generators();
  std::array<Int, 3> cs{};
  for (int i = 0; i < 3; ++i) {
    cs[i] = detail::least_multiple_in(g[i], g[(i + 1) % 3], g[(i + 2) % 3]);
  }

  static constexpr std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) {
    const Int a1 = g[p[0]], a2 = g[p[1]], a3 = g[p[2]];
    const Int c1 = cs[p[0]], c2 = cs[p[1]], c3 = cs[p[2]];
    const auto [beta_prime, gamma] =
        detail::positive_representation(checked_mul(c1, a1), a2, a3, c2);
    const auto [alpha, gamma_prime] =
        detail::positive_representation(checked_mul(c2, a2), a1, a3, c1);
    const auto [alpha_prime, beta] =
        detail::positive_representation(checked_mul(c3, a3), a1, a2, c1);
    internal_check(c1 == alpha + alpha_prime && c2 == beta + beta_prime &&
                       c3 == gamma + gamma_prime,
                   "relation degrees disagree with matrix exponents");

    const std::array<Int, 6> degrees{a1 * alpha,       a2 * beta,  a3 * gamma,
                                     a2 * beta_prime,  a3 * gamma_prime,
                                     a1 * alpha_prime};
    if (degrees[0] != *std::min_element(degrees.begin(), degrees.end())) continue;

    HerzogData data;
    data.ordering = {a1, a2, a3};
    data.alpha = alpha;
    data.beta = beta;
    data.gamma = gamma;
    data.alpha_prime = alpha_prime;
    data.beta_prime = beta_prime;
    data.gamma_prime = gamma_prime;
    data.c = {c1, c2, c3};
    data.d = {checked_mul(a3, c3), checked_mul(a1, c1), checked_mul(a2, c2)};
    data.m_deg = checked_add(checked_mul(a1, alpha), data.d[0]);
    data.n_deg = checked_add(checked_mul(a1, alpha_prime), data.d[2]);
    internal_check(data.m_deg == a2 * beta + data.d[1] &&
                       data.m_deg == a3 * gamma + data.d[2],
                   "first maximal degree is not well defined");
    internal_check(data.n_deg == a2 * beta_prime + data.d[0] &&
                       data.n_deg == a3 * gamma_prime + data.d[1],
                   "second maximal degree is not well defined");
    const auto& pf = H.pseudo_frobenius();
    internal_check(std::abs(data.n_deg - data.m_deg) == pf[1] - pf[0],
                   "maximal degree gap disagrees with pseudo-Frobenius gap");
    return data;
  }
  throw InternalInconsistency("no generator ordering normalizes the structure matrix");
}

/// Closed form h(omega) = alpha * beta' * (gamma + gamma') in the normalized
/// structure matrix.
inline Int h_omega_formula(const SemigroupPtr& H) {
  const HerzogData d = structure_matrix(H);
  return checked_mul(checked_mul(d.alpha, d.beta_prime), d.gamma + d.gamma_prime);
}

/// The three 2-generated ideals isomorphic to the canonical module.
inline std::array<RelativeIdeal, 3> canonical_pairs(const SemigroupPtr& H) {
  const HerzogData t = structure_matrix(H);
  const Int a1 = t.ordering[0], a2 = t.ordering[1], a3 = t.ordering[2];
  return {RelativeIdeal(H, {checked_mul(a1, t.alpha), checked_mul(a2, t.beta_prime)}),
          RelativeIdeal(H, {checked_mul(a2, t.beta), checked_mul(a3, t.gamma_prime)}),
          RelativeIdeal(H, {checked_mul(a3, t.gamma), checked_mul(a1, t.alpha_prime)})};
}

}  // namespace numsemi
