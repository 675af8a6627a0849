#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "numsemi/base.hpp"
#include "numsemi/semigroup.hpp"

namespace numsemi {

/// Fractional monomial ideal of a numerical semigroup ring: a set E of
/// integers, bounded below, with E + H contained in E. Stored as the unique
/// minimal generator list (an antichain under the H-divisibility order).
class RelativeIdeal {
 public:
  RelativeIdeal(SemigroupPtr ambient, std::vector<Int> generators)
      : ambient_(std::move(ambient)) {
    if (!ambient_) fail(Errc::empty_generators, "ideal needs an ambient semigroup");
    if (generators.empty()) fail(Errc::empty_generators, "ideal generator list is empty");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (Int g : generators) {
      bool redundant = false;
      for (Int kept : gens_) {
        if (ambient_->contains(g - kept)) { redundant = true; break; }
      }
      if (!redundant) gens_.push_back(g);
    }
  }

  static RelativeIdeal unit(SemigroupPtr ambient) {
    return RelativeIdeal(std::move(ambient), {0});
  }

  /// The maximal ideal: all nonzero elements of H.
  static RelativeIdeal maximal(SemigroupPtr ambient) {
    auto gens = ambient->minimal_generators();
    return RelativeIdeal(std::move(ambient), std::move(gens));
  }

  const std::vector<Int>& min_gens() const noexcept { return gens_; }
  Int value() const noexcept { return gens_.front(); }
  Int max_gen() const noexcept { return gens_.back(); }
  const SemigroupPtr& ambient() const noexcept { return ambient_; }
  const NumericalSemigroup& H() const noexcept { return *ambient_; }

  bool contains(Int x) const noexcept {
    for (Int g : gens_) {
      if (g > x) return false;
      if (ambient_->contains(x - g)) return true;
    }
    return false;
  }

  bool is_integral() const noexcept {
    for (Int g : gens_) {
      if (!ambient_->contains(g)) return false;
    }
    return true;
  }

  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front() == 0; }

  bool subset_of(const RelativeIdeal& other) const {
    require_same_ambient(other);
    for (Int g : gens_) {
      if (!other.contains(g)) return false;
    }
    return true;
  }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    a.require_same_ambient(b);
    return a.gens_ == b.gens_;
  }
  friend bool operator!=(const RelativeIdeal& a, const RelativeIdeal& b) { return !(a == b); }

  void require_same_ambient(const RelativeIdeal& other) const {
    if (ambient_ == other.ambient_) return;
    if (*ambient_ == *other.ambient_) return;
    fail(Errc::mixed_semigroups, "ideals live over different semigroups");
  }

  void require_integral(const char* op) const {
    if (!is_integral()) fail(Errc::not_integral, std::string(op) + " requires an integral ideal");
  }

 private:
  SemigroupPtr ambient_;
  std::vector<Int> gens_;
};

inline RelativeIdeal sum(const RelativeIdeal& a, const RelativeIdeal& b) {
  a.require_same_ambient(b);
  std::vector<Int> gens = a.min_gens();
  gens.insert(gens.end(), b.min_gens().begin(), b.min_gens().end());
  return RelativeIdeal(a.ambient(), std::move(gens));
}

inline RelativeIdeal product(const RelativeIdeal& a, const RelativeIdeal& b) {
  a.require_same_ambient(b);
  std::vector<Int> gens;
  gens.reserve(a.min_gens().size() * b.min_gens().size());
  for (Int x : a.min_gens()) {
    for (Int y : b.min_gens()) gens.push_back(checked_add(x, y));
  }
  return RelativeIdeal(a.ambient(), std::move(gens));
}

inline RelativeIdeal shift(const RelativeIdeal& a, Int c) {
  std::vector<Int> gens;
  gens.reserve(a.min_gens().size());
  for (Int x : a.min_gens()) gens.push_back(checked_add(x, c));
  return RelativeIdeal(a.ambient(), std::move(gens));
}

namespace detail {
inline Int fbar(const NumericalSemigroup& H) { return std::max<Int>(H.frobenius(), 0); }
}

inline RelativeIdeal intersect(const RelativeIdeal& a, const RelativeIdeal& b) {
  a.require_same_ambient(b);
  const auto& H = a.H();
  const Int lo = std::max(a.value(), b.value());
  const Int hi = lo + H.frobenius() + 1 + detail::fbar(H);
  std::vector<Int> gens;
  for (Int z = lo; z <= hi; ++z) {
    if (a.contains(z) && b.contains(z)) gens.push_back(z);
  }
  return RelativeIdeal(a.ambient(), std::move(gens));
}

/// colon(E, E') = { z : z + E' is contained in E }, as a relative ideal.
inline RelativeIdeal colon(const RelativeIdeal& a, const RelativeIdeal& b) {
  a.require_same_ambient(b);
  const auto& H = a.H();
  const Int lo = a.value() - b.max_gen();
  const Int hi = a.value() - b.value() + H.frobenius() + 1 + detail::fbar(H);
  std::vector<Int> gens;
  for (Int z = lo; z <= hi; ++z) {
    bool ok = true;
    for (Int g : b.min_gens()) {
      if (!a.contains(z + g)) { ok = false; break; }
    }
    if (ok) gens.push_back(z);
  }
  return RelativeIdeal(a.ambient(), std::move(gens));
}

/// colon(E, E') intersected with R; E must be integral.
inline RelativeIdeal colon_in_R(const RelativeIdeal& a, const RelativeIdeal& b) {
  a.require_integral("colon_in_R");
  return intersect(colon(a, b), RelativeIdeal::unit(a.ambient()));
}

/// Number of semigroup elements missing from an integral ideal.
inline Int colength(const RelativeIdeal& a) {
  a.require_integral("colength");
  const auto& H = a.H();
  Int count = 0;
  const Int hi = a.value() + H.frobenius();
  for (Int x = 0; x <= hi; ++x) {
    if (H.contains(x) && !a.contains(x)) ++count;
  }
  return count;
}

inline RelativeIdeal trace(const RelativeIdeal& a) {
  return product(colon(RelativeIdeal::unit(a.ambient()), a), a);
}

/// Trace ideals are exactly the E with colon(R, E) = colon(E, E); verified
/// against the product characterization E = trace(E).
inline bool is_trace_ideal(const RelativeIdeal& a) {
  a.require_integral("is_trace_ideal");
  const bool by_colon = colon(RelativeIdeal::unit(a.ambient()), a) == colon(a, a);
  const bool by_product = a == trace(a);
  internal_check(by_colon == by_product, "trace ideal characterizations disagree");
  return by_colon;
}

/// { x in H : x >= value(E) }, the closure of an integral E.
inline RelativeIdeal integral_closure(const RelativeIdeal& a) {
  a.require_integral("integral_closure");
  const auto& H = a.H();
  const Int v = a.value();
  std::vector<Int> gens;
  for (Int x = v; x <= v + 2 * detail::fbar(H) + 2; ++x) {
    if (H.contains(x)) gens.push_back(x);
  }
  return RelativeIdeal(a.ambient(), std::move(gens));
}

/// Reduction test E <= E' (both integral, E contained in E'): closure
/// containment, cross-checked against power stabilization.
inline bool is_reduction(const RelativeIdeal& a, const RelativeIdeal& b) {
  a.require_integral("is_reduction");
  b.require_integral("is_reduction");
  if (!a.subset_of(b)) fail(Errc::not_nested, "is_reduction needs E contained in E'");
  const bool by_closure = b.subset_of(integral_closure(a));

  bool by_powers = false;
  if (a.value() == b.value()) {
    RelativeIdeal power = b;
    const Int limit = a.H().genus() + 2;
    for (Int n = 1; n <= limit; ++n) {
      RelativeIdeal next = product(b, power);
      if (next == product(a, power)) { by_powers = true; break; }
      power = std::move(next);
    }
  }
  // When values differ, every power equation fails on valuation alone.
  internal_check(by_closure == by_powers, "reduction characterizations disagree");
  return by_closure;
}

/// Dimension of the socle of R/E over the residue field.
inline Int socle_dimension(const RelativeIdeal& a) {
  a.require_integral("socle_dimension");
  const auto& H = a.H();
  const RelativeIdeal quot = colon_in_R(a, RelativeIdeal::maximal(a.ambient()));
  Int count = 0;
  const Int hi = a.value() + detail::fbar(H);
  for (Int x = 0; x <= hi; ++x) {
    if (quot.contains(x) && !a.contains(x)) ++count;
  }
  return count;
}

/// True when R/E is a Gorenstein ring; false for E = R (zero ring).
inline bool is_quotient_gorenstein(const RelativeIdeal& a) {
  return socle_dimension(a) == 1;
}

}  // namespace numsemi
