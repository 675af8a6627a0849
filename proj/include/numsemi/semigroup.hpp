#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "numsemi/base.hpp"

namespace numsemi {

/// Additive submonoid of the nonnegative integers with finite complement,
/// built from a generating set with gcd 1. Immutable after construction.
class NumericalSemigroup {
 public:
  static constexpr Int default_table_cap = 1'000'000;

  explicit NumericalSemigroup(std::vector<Int> generators,
                              Int table_cap = default_table_cap) {
    if (generators.empty()) fail(Errc::empty_generators, "generator list is empty");
    for (Int g : generators) {
      if (g <= 0) fail(Errc::non_positive_generator, "generator " + std::to_string(g) + " is not positive");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    Int g = 0;
    for (Int a : generators) g = std::gcd(g, a);
    if (g != 1) fail(Errc::gcd_not_one, "generators have gcd " + std::to_string(g));
    generators_ = std::move(generators);

    const Int mult = generators_.front();
    const Int amax = generators_.back();
    std::vector<char> member;
    auto sieve = [&](Int bound) {
      if (bound + 1 > table_cap) {
        fail(Errc::window_too_small,
             "membership table needs " + std::to_string(bound + 1) +
                 " cells, cap is " + std::to_string(table_cap));
      }
      member.assign(static_cast<std::size_t>(bound + 1), 0);
      member[0] = 1;
      for (Int x = 1; x <= bound; ++x) {
        for (Int a : generators_) {
          if (a > x) break;
          if (member[static_cast<std::size_t>(x - a)]) {
            member[static_cast<std::size_t>(x)] = 1;
            break;
          }
        }
      }
    };

    Int bound = checked_add(checked_mul(mult, amax), checked_mul(2, amax));
    for (;;) {
      sieve(bound);
      bool closed = true;
      for (Int x = bound - mult + 1; x <= bound; ++x) {
        if (!member[static_cast<std::size_t>(x)]) { closed = false; break; }
      }
      if (closed) break;
      bound = checked_mul(bound, 2);
    }

    frobenius_ = -1;
    for (Int x = bound; x >= 0; --x) {
      if (!member[static_cast<std::size_t>(x)]) { frobenius_ = x; break; }
    }
    if (frobenius_ + 2 * amax + 1 > bound) {
      bound = frobenius_ + 2 * amax + 1;
      sieve(bound);
    }
    for (Int x = 1; x <= frobenius_; ++x) {
      if (!member[static_cast<std::size_t>(x)]) gaps_.push_back(x);
    }

    apery_.assign(static_cast<std::size_t>(mult), 0);
    for (Int r = 0; r < mult; ++r) {
      Int x = r;
      while (!member[static_cast<std::size_t>(x)]) x += mult;
      apery_[static_cast<std::size_t>(r)] = x;
    }

    for (Int a : generators_) {
      bool reducible = false;
      for (Int h = 1; h < a && !reducible; ++h) {
        reducible = member[static_cast<std::size_t>(h)] && member[static_cast<std::size_t>(a - h)];
      }
      if (!reducible) minimal_generators_.push_back(a);
    }

    for (Int f : gaps_) {
      bool pf = true;
      for (Int a : minimal_generators_) {
        if (!member[static_cast<std::size_t>(f + a)]) { pf = false; break; }
      }
      if (pf) pseudo_frobenius_.push_back(f);
    }
  }

  /// Apery-based membership test, O(1).
  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
  }

  Int multiplicity() const noexcept { return generators_.front(); }
  Int frobenius() const noexcept { return frobenius_; }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(minimal_generators_.size()); }
  bool is_full() const noexcept { return frobenius_ == -1; }

  const std::vector<Int>& generators() const noexcept { return generators_; }
  const std::vector<Int>& minimal_generators() const noexcept { return minimal_generators_; }
  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  /// Least member in each residue class mod multiplicity, indexed by residue.
  const std::vector<Int>& apery() const noexcept { return apery_; }

  const std::vector<Int>& pseudo_frobenius() const {
    if (is_full()) fail(Errc::full_semigroup, "pseudo-Frobenius set is empty for the full semigroup");
    return pseudo_frobenius_;
  }

  Int type() const { return static_cast<Int>(pseudo_frobenius().size()); }

  bool is_symmetric() const {
    if (is_full()) fail(Errc::full_semigroup, "symmetry is undefined for the full semigroup");
    const bool sym = 2 * genus() == frobenius_ + 1;
    internal_check(sym == (type() == 1), "symmetry test disagrees with type = 1");
    return sym;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_generators_ == b.minimal_generators_;
  }
  friend bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return !(a == b);
  }

 private:
  std::vector<Int> generators_;
  std::vector<Int> minimal_generators_;
  std::vector<Int> gaps_;
  std::vector<Int> apery_;
  std::vector<Int> pseudo_frobenius_;
  Int frobenius_ = -1;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr make_semigroup(std::vector<Int> generators,
                                   Int table_cap = NumericalSemigroup::default_table_cap) {
  return std::make_shared<const NumericalSemigroup>(std::move(generators), table_cap);
}

}  // namespace numsemi
