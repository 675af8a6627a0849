#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "numsemi/bg_search.hpp"
#include "numsemi/herzog.hpp"
#include "numsemi/ideal.hpp"
#include "numsemi/invariants.hpp"
#include "numsemi/semigroup.hpp"

namespace numsemi {

using json = nlohmann::ordered_json;

/// Text form "<a1,a2,...>" with angle brackets.
inline std::string display_form(const std::vector<Int>& gens) {
  std::string s = "⟨";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens[i]);
  }
  s += "⟩";
  return s;
}

/// Parses "3,4,5", "3 4 5" or the angle-bracket text form.
inline std::vector<Int> parse_generators(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(std::stoll(cur));
      cur.clear();
    }
  };
  for (unsigned char ch : text) {
    if (ch == '-' || (ch >= '0' && ch <= '9')) {
      cur += static_cast<char>(ch);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

inline json to_json(const NumericalSemigroup& H) {
  json j;
  j["generators"] = H.generators();
  j["minimal_generators"] = H.minimal_generators();
  j["display"] = display_form(H.minimal_generators());
  j["multiplicity"] = H.multiplicity();
  j["embedding_dimension"] = H.embedding_dimension();
  j["frobenius"] = H.frobenius();
  j["genus"] = H.genus();
  j["gaps"] = H.gaps();
  j["apery"] = H.apery();
  if (H.is_full()) {
    j["pseudo_frobenius"] = nullptr;
    j["type"] = nullptr;
    j["symmetric"] = nullptr;
  } else {
    j["pseudo_frobenius"] = H.pseudo_frobenius();
    j["type"] = H.type();
    j["symmetric"] = H.is_symmetric();
  }
  return j;
}

inline json to_json(const RelativeIdeal& E) {
  json j;
  j["semigroup"] = E.H().minimal_generators();
  j["generators"] = E.min_gens();
  return j;
}

inline json to_json(const HerzogData& t) {
  json j;
  j["ordering"] = t.ordering;
  j["alpha"] = t.alpha;
  j["beta"] = t.beta;
  j["gamma"] = t.gamma;
  j["alpha_prime"] = t.alpha_prime;
  j["beta_prime"] = t.beta_prime;
  j["gamma_prime"] = t.gamma_prime;
  j["c"] = t.c;
  j["d"] = t.d;
  j["m_deg"] = t.m_deg;
  j["n_deg"] = t.n_deg;
  return j;
}

inline json to_json(const InvariantReport& r) {
  json j;
  j["generators"] = r.semigroup->minimal_generators();
  j["type"] = r.type;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dimension"] = r.embedding_dimension;
  j["frobenius"] = r.frobenius;
  j["h_omega"] = r.h_omega;
  j["gorenstein"] = r.gorenstein;
  j["nearly_gorenstein"] = r.nearly_gorenstein;
  j["almost_gorenstein"] = r.almost_gorenstein;
  j["minimal_multiplicity"] = r.minimal_multiplicity;
  if (r.trace_omega) j["trace_omega"] = r.trace_omega->min_gens();
  if (r.bg_upper) {
    j["bg_upper"] = *r.bg_upper;
  } else {
    j["bg_upper"] = nullptr;
  }
  return j;
}

inline json to_json(const BgSearchResult& r) {
  json j;
  j["bound"] = r.bound;
  j["best_colength"] = r.best_colength ? json(*r.best_colength) : json(nullptr);
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

}  // namespace numsemi
