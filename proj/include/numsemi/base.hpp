#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numsemi {

using Int = std::int64_t;

/// Domain error categories; names are stable and machine-parsable.
enum class Errc {
  empty_generators,
  non_positive_generator,
  gcd_not_one,
  full_semigroup,
  mixed_semigroups,
  not_integral,
  not_nested,
  unit_ideal,
  not_three_generated,
  symmetric_semigroup,
  ambiguous_representation,
  window_too_small,
  overflow,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_generators: return "EmptyGenerators";
    case Errc::non_positive_generator: return "NonPositiveGenerator";
    case Errc::gcd_not_one: return "GcdNotOne";
    case Errc::full_semigroup: return "FullSemigroup";
    case Errc::mixed_semigroups: return "MixedSemigroups";
    case Errc::not_integral: return "NotIntegral";
    case Errc::not_nested: return "NotNested";
    case Errc::unit_ideal: return "UnitIdeal";
    case Errc::not_three_generated: return "NotThreeGenerated";
    case Errc::symmetric_semigroup: return "SymmetricSemigroup";
    case Errc::ambiguous_representation: return "AmbiguousRepresentation";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::overflow: return "Overflow";
  }
  return "UnknownError";
}

/// Invalid input or an operation outside its domain. Recoverable by the caller.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

/// A provable relation failed to hold; indicates a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& message)
      : std::logic_error(message) {}
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalInconsistency(what);
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace numsemi
