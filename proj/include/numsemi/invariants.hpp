#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "numsemi/base.hpp"
#include "numsemi/bg_search.hpp"
#include "numsemi/ideal.hpp"
#include "numsemi/semigroup.hpp"

namespace numsemi {

/// Least c such that shift(E, c) is integral, with the shifted ideal.
inline std::pair<RelativeIdeal, Int> integralize(const RelativeIdeal& a) {
  const auto& H = a.H();
  for (Int c = -a.value();; ++c) {
    bool ok = true;
    for (Int g : a.min_gens()) {
      if (!H.contains(g + c)) { ok = false; break; }
    }
    if (ok) return {shift(a, c), c};
  }
}

namespace detail {
inline Int h_of_integral(const RelativeIdeal& a) {
  return colength(a) + colon(RelativeIdeal::unit(a.ambient()), a).value();
}

inline RelativeIdeal next_integral_shift(const RelativeIdeal& a, Int after) {
  const auto& H = a.H();
  for (Int c = after + 1;; ++c) {
    bool ok = true;
    for (Int g : a.min_gens()) {
      if (!H.contains(g + c)) { ok = false; break; }
    }
    if (ok) return shift(a, c);
  }
}
}  // namespace detail

/// Colength of the best integral shift of E: h(E) = colength(E') + v(R : E')
/// for any integral shift E'. Shift independence is asserted.
inline Int h_invariant(const RelativeIdeal& a) {
  if (a.is_integral()) return detail::h_of_integral(a);
  auto [shifted, c] = integralize(a);
  const Int h = detail::h_of_integral(shifted);
  const Int h_next = detail::h_of_integral(detail::next_integral_shift(a, c));
  internal_check(h == h_next, "h-invariant depends on the integralizing shift");
  return h;
}

/// The integral shift of E attaining h(E): shift by v(R : E') after
/// integralizing. Always a partial trace ideal of E.
inline RelativeIdeal monomial_partial_trace(const RelativeIdeal& a) {
  RelativeIdeal base = a.is_integral() ? a : integralize(a).first;
  const Int v = colon(RelativeIdeal::unit(base.ambient()), base).value();
  return shift(base, v);
}

/// Partial trace test for integral E: v(R : E) >= 0, cross-checked against
/// the colength and reduction characterizations.
inline bool is_partial_trace(const RelativeIdeal& a) {
  a.require_integral("is_partial_trace");
  const bool by_valuation = colon(RelativeIdeal::unit(a.ambient()), a).value() >= 0;
  const bool by_colength = colength(a) == h_invariant(a);
  const bool by_reduction = is_reduction(a, trace(a));
  internal_check(by_valuation == by_colength && by_colength == by_reduction,
                 "partial trace characterizations disagree");
  return by_valuation;
}

/// Canonical ideal K(H) = { z : F - z not in H }.
inline RelativeIdeal canonical_ideal(const SemigroupPtr& Hp) {
  const auto& H = *Hp;
  if (H.is_full()) fail(Errc::full_semigroup, "canonical ideal needs a proper semigroup");
  const Int F = H.frobenius();
  std::vector<Int> gens;
  for (Int z = 0; z <= 2 * F + 2; ++z) {
    if (!H.contains(F - z)) gens.push_back(z);
  }
  return RelativeIdeal(Hp, std::move(gens));
}

inline Int h_omega(const SemigroupPtr& H) { return h_invariant(canonical_ideal(H)); }

inline RelativeIdeal trace_omega(const SemigroupPtr& H) { return trace(canonical_ideal(H)); }

/// Nearly Gorenstein: the maximal ideal lies in the trace of the canonical module.
inline bool is_nearly_gorenstein(const SemigroupPtr& H) {
  return RelativeIdeal::maximal(H).subset_of(trace_omega(H));
}

/// Almost Gorenstein: m K' = m + v(K') for the integral copy K' of the
/// canonical ideal.
inline bool is_almost_gorenstein(const SemigroupPtr& H) {
  const RelativeIdeal K = integralize(canonical_ideal(H)).first;
  const RelativeIdeal m = RelativeIdeal::maximal(H);
  return product(m, K) == shift(m, K.value());
}

/// Weakly m-full: (mE :_R m) = E, for proper integral E.
inline bool is_weakly_m_full(const RelativeIdeal& a) {
  a.require_integral("is_weakly_m_full");
  if (a.is_unit()) fail(Errc::unit_ideal, "is_weakly_m_full needs a proper ideal");
  const RelativeIdeal m = RelativeIdeal::maximal(a.ambient());
  return colon_in_R(product(m, a), m) == a;
}

/// Burch: mE differs from m(E :_R m), for proper integral E.
inline bool is_burch(const RelativeIdeal& a) {
  a.require_integral("is_burch");
  if (a.is_unit()) fail(Errc::unit_ideal, "is_burch needs a proper ideal");
  const RelativeIdeal m = RelativeIdeal::maximal(a.ambient());
  return product(m, a) != product(m, colon_in_R(a, m));
}

/// Minimal multiplicity: m^2 = m shifted by the multiplicity.
inline bool has_minimal_multiplicity(const SemigroupPtr& H) {
  const RelativeIdeal m = RelativeIdeal::maximal(H);
  return product(m, m) == shift(m, (*H).multiplicity());
}

struct InvariantReport {
  SemigroupPtr semigroup;
  Int type = 0;
  Int multiplicity = 0;
  Int embedding_dimension = 0;
  Int frobenius = 0;
  Int h_omega = 0;
  bool gorenstein = false;
  bool nearly_gorenstein = false;
  bool almost_gorenstein = false;
  bool minimal_multiplicity = false;
  std::optional<RelativeIdeal> trace_omega;
  std::optional<Int> bg_upper;
};

/// Full classification without the Gorenstein-distance search. Provable
/// relations between the fields are asserted.
inline InvariantReport classify_core(const SemigroupPtr& H) {
  if (H->is_full()) fail(Errc::full_semigroup, "classification needs a proper semigroup");
  InvariantReport r;
  r.semigroup = H;
  r.type = H->type();
  r.multiplicity = H->multiplicity();
  r.embedding_dimension = H->embedding_dimension();
  r.frobenius = H->frobenius();
  r.h_omega = h_omega(H);
  r.gorenstein = H->is_symmetric();
  r.nearly_gorenstein = is_nearly_gorenstein(H);
  r.almost_gorenstein = is_almost_gorenstein(H);
  r.minimal_multiplicity = has_minimal_multiplicity(H);
  r.trace_omega = numsemi::trace_omega(H);

  internal_check(r.gorenstein == (r.h_omega == 0), "h(omega) = 0 must match Gorenstein");
  internal_check(r.h_omega != 1, "h(omega) = 1 is impossible");
  if (r.h_omega == 2) {
    internal_check(*r.trace_omega == RelativeIdeal::maximal(H),
                   "h(omega) = 2 forces trace(omega) = m");
    internal_check(r.embedding_dimension == 1 + r.type,
                   "h(omega) = 2 forces edim = 1 + type");
  }
  internal_check(!r.almost_gorenstein || r.nearly_gorenstein,
                 "almost Gorenstein must imply nearly Gorenstein");
  return r;
}

/// classify_core plus the Gorenstein-distance search; the search bound
/// defaults to h(omega).
inline InvariantReport classify(const SemigroupPtr& H,
                                std::optional<Int> bg_bound = std::nullopt) {
  InvariantReport r = classify_core(H);
  const BgSearchResult bg = bg_upper_bound(H, bg_bound.value_or(r.h_omega));
  if (bg.best_colength) {
    internal_check(r.h_omega <= 2 * *bg.best_colength,
                   "h(omega) exceeds twice the Gorenstein distance bound");
    r.bg_upper = bg.best_colength;
  }
  return r;
}

}  // namespace numsemi
