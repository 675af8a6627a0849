// Command-line surface: single queries and batch sweeps over semigroup
// families, with machine-readable output.

#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "numsemi/numsemi.hpp"

namespace {

using numsemi::Errc;
using numsemi::Int;
using numsemi::json;
using numsemi::RelativeIdeal;
using numsemi::SemigroupPtr;

Int g_window_cap = numsemi::NumericalSemigroup::default_table_cap;

std::vector<Int> parse_all(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    joined += t;
    joined += ',';
  }
  try {
    return numsemi::parse_generators(joined);
  } catch (const std::exception&) {
    numsemi::fail(Errc::overflow, "integer out of range: " + joined);
  }
}

SemigroupPtr semigroup_of(const std::vector<std::string>& tokens) {
  return numsemi::make_semigroup(parse_all(tokens), g_window_cap);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void add_window_cap(CLI::App* cmd) {
  cmd->add_option("--window-cap", g_window_cap,
                  "largest membership table the engine may allocate");
}

// --- sweep ---

struct LinearTerm {
  Int scale = 0;   // coefficient of n
  Int offset = 0;  // constant part
};

/// Parses one component of a family template: "2n+1", "n-3", "n", or "7".
LinearTerm parse_term(const std::string& text) {
  LinearTerm term;
  std::string head;
  std::size_t i = 0;
  while (i < text.size() && text[i] != 'n') head += text[i++];
  if (i == text.size()) {  // constant term
    term.offset = numsemi::parse_generators(head).at(0);
    return term;
  }
  if (!head.empty() && head.back() == '*') head.pop_back();
  term.scale = head.empty() || head == "-" ? (head.empty() ? 1 : -1)
                                           : numsemi::parse_generators(head).at(0);
  std::string tail = text.substr(i + 1);
  if (!tail.empty()) term.offset = numsemi::parse_generators(tail).at(0);
  return term;
}

std::vector<LinearTerm> parse_family(const std::string& text) {
  std::vector<LinearTerm> terms;
  std::string cur;
  auto flush = [&] {
    std::string trimmed;
    for (char c : cur) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (!trimmed.empty()) terms.push_back(parse_term(trimmed));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (static_cast<unsigned char>(c) < 0x80) {  // drop display brackets
      cur += c;
    }
  }
  flush();
  if (terms.empty()) numsemi::fail(Errc::empty_generators, "family template is empty");
  return terms;
}

struct SweepRow {
  std::vector<Int> input;
  std::optional<numsemi::InvariantReport> report;
  std::optional<Int> h_formula;
  std::string error;
};

void compute_row(SweepRow& row, std::optional<Int> bg_bound) {
  try {
    SemigroupPtr H = numsemi::make_semigroup(row.input, g_window_cap);
    row.report = numsemi::classify(H, bg_bound);
    if (H->embedding_dimension() == 3 && !H->is_symmetric()) {
      row.h_formula = numsemi::h_omega_formula(H);
    }
  } catch (const numsemi::Error& e) {
    row.error = e.name();
  }
}

std::string join_ints(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

void print_sweep_tsv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "generators\tmultiplicity\tembedding_dimension\ttype\tfrobenius\th_omega"
        "\th_omega_formula\tgorenstein\tnearly_gorenstein\talmost_gorenstein"
        "\tbg_upper\terror\n";
  for (const auto& row : rows) {
    os << join_ints(row.input) << '\t';
    if (row.report) {
      const auto& r = *row.report;
      os << r.multiplicity << '\t' << r.embedding_dimension << '\t' << r.type << '\t'
         << r.frobenius << '\t' << r.h_omega << '\t';
      if (row.h_formula) os << *row.h_formula;
      os << '\t' << (r.gorenstein ? "true" : "false") << '\t'
         << (r.nearly_gorenstein ? "true" : "false") << '\t'
         << (r.almost_gorenstein ? "true" : "false") << '\t';
      if (r.bg_upper) os << *r.bg_upper;
      os << '\t';
    } else {
      os << "\t\t\t\t\t\t\t\t\t\t";
    }
    os << row.error << "\n";
  }
}

void print_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  for (const auto& row : rows) {
    json j;
    j["generators"] = row.input;
    if (row.report) {
      json r = numsemi::to_json(*row.report);
      r.erase("generators");
      j.update(r);
      j["h_omega_formula"] = row.h_formula ? json(*row.h_formula) : json(nullptr);
    }
    j["error"] = row.error.empty() ? json(nullptr) : json(row.error);
    os << j.dump() << "\n";
  }
}

int run_sweep(const std::vector<std::string>& gen_lists, const std::string& family,
              Int from, Int to, std::optional<Int> bg_bound, const std::string& format,
              unsigned jobs, const std::string& out_path) {
  std::vector<SweepRow> rows;
  for (const auto& text : gen_lists) {
    rows.push_back({numsemi::parse_generators(text), std::nullopt, std::nullopt, ""});
  }
  if (!family.empty()) {
    const auto terms = parse_family(family);
    for (Int n = from; n <= to; ++n) {
      SweepRow row;
      for (const auto& t : terms) {
        row.input.push_back(numsemi::checked_add(numsemi::checked_mul(t.scale, n), t.offset));
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) numsemi::fail(Errc::empty_generators, "sweep has no inputs");

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        compute_row(rows[i], bg_bound);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) numsemi::fail(Errc::empty_generators, "cannot open output file " + out_path);
    os = &file;
  }
  if (format == "tsv") {
    print_sweep_tsv(*os, rows);
  } else {
    print_sweep_json(*os, rows);
  }
  return 0;
}

// --- single-query subcommands ---

RelativeIdeal ideal_arg(const SemigroupPtr& H, const std::vector<std::string>& tokens) {
  return RelativeIdeal(H, parse_all(tokens));
}

int run_ideal_op(const std::string& op, const std::vector<std::string>& sg,
                 const std::vector<std::string>& first,
                 const std::vector<std::string>& second) {
  SemigroupPtr H = semigroup_of(sg);
  RelativeIdeal a = ideal_arg(H, first);
  auto need_second = [&]() -> RelativeIdeal {
    if (second.empty()) {
      numsemi::fail(Errc::empty_generators, "operation " + op + " needs --other");
    }
    return ideal_arg(H, second);
  };
  if (op == "minimalize") {
    emit(numsemi::to_json(a));
  } else if (op == "sum") {
    emit(numsemi::to_json(numsemi::sum(a, need_second())));
  } else if (op == "product") {
    emit(numsemi::to_json(numsemi::product(a, need_second())));
  } else if (op == "intersect") {
    emit(numsemi::to_json(numsemi::intersect(a, need_second())));
  } else if (op == "colon") {
    emit(numsemi::to_json(numsemi::colon(a, need_second())));
  } else if (op == "colon-in-r") {
    emit(numsemi::to_json(numsemi::colon_in_R(a, need_second())));
  } else if (op == "closure") {
    emit(numsemi::to_json(numsemi::integral_closure(a)));
  } else if (op == "colength") {
    emit(json(numsemi::colength(a)));
  } else if (op == "socle") {
    emit(json(numsemi::socle_dimension(a)));
  } else if (op == "is-trace-ideal") {
    emit(json(numsemi::is_trace_ideal(a)));
  } else if (op == "is-partial-trace") {
    emit(json(numsemi::is_partial_trace(a)));
  } else if (op == "is-reduction") {
    emit(json(numsemi::is_reduction(a, need_second())));
  } else if (op == "is-burch") {
    emit(json(numsemi::is_burch(a)));
  } else if (op == "is-weakly-m-full") {
    emit(json(numsemi::is_weakly_m_full(a)));
  } else {
    numsemi::fail(Errc::empty_generators, "unknown ideal operation " + op);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of numerical semigroup rings and their monomial ideals"};
  app.require_subcommand(1);

  std::vector<std::string> gens, ideal_gens, other_gens;
  std::string ideal_op, family, format = "json", out_path;
  Int from = 1, to = 1;
  std::optional<Int> bg_bound;
  unsigned jobs = 1;
  std::vector<std::string> gen_lists;

  auto* sg = app.add_subcommand("semigroup", "structure report for a numerical semigroup");
  sg->add_option("generators", gens)->required()->expected(-1);
  add_window_cap(sg);

  auto* ideal = app.add_subcommand("ideal", "operations on relative monomial ideals");
  ideal->add_option("operation", ideal_op)->required();
  ideal->add_option("--semigroup", gens)->required()->expected(-1);
  ideal->add_option("--ideal", ideal_gens)->required()->expected(-1);
  ideal->add_option("--other", other_gens)->expected(-1);
  add_window_cap(ideal);

  auto* hinv = app.add_subcommand("h-invariant", "least colength among integral shifts");
  hinv->add_option("--semigroup", gens)->required()->expected(-1);
  hinv->add_option("--ideal", ideal_gens)->required()->expected(-1);
  add_window_cap(hinv);

  auto* ptrace = app.add_subcommand("partial-trace", "integral shift attaining the h-invariant");
  ptrace->add_option("--semigroup", gens)->required()->expected(-1);
  ptrace->add_option("--ideal", ideal_gens)->required()->expected(-1);
  add_window_cap(ptrace);

  auto* trace = app.add_subcommand("trace", "trace ideal (R : E) E");
  trace->add_option("--semigroup", gens)->required()->expected(-1);
  trace->add_option("--ideal", ideal_gens)->required()->expected(-1);
  add_window_cap(trace);

  auto* classify = app.add_subcommand("classify", "invariant report for a semigroup ring");
  classify->add_option("generators", gens)->required()->expected(-1);
  classify->add_option("--bg-bound", bg_bound, "depth bound for the Gorenstein distance search");
  add_window_cap(classify);

  auto* herzog = app.add_subcommand("herzog", "structure matrix of a 3-generated non-symmetric semigroup");
  herzog->add_option("generators", gens)->required()->expected(-1);
  add_window_cap(herzog);

  auto* bg = app.add_subcommand("bg", "breadth-first search for a close Gorenstein subsemigroup");
  bg->add_option("generators", gens)->required()->expected(-1);
  bg->add_option("--bg-bound", bg_bound, "depth bound; defaults to h(omega)");
  add_window_cap(bg);

  auto* sweep = app.add_subcommand("sweep", "batch classification over a semigroup family");
  sweep->add_option("--gens", gen_lists, "explicit generator list, repeatable (e.g. \"3,4,5\")");
  sweep->add_option("--family", family, "linear template such as \"2n+1,2n+2,2n+3\"");
  sweep->add_option("--from", from, "first n for the family template");
  sweep->add_option("--to", to, "last n for the family template");
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  sweep->add_option("--bg-bound", bg_bound);
  sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "write the table to a file instead of stdout");
  add_window_cap(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sg->parsed()) {
      emit(numsemi::to_json(*semigroup_of(gens)));
    } else if (ideal->parsed()) {
      return run_ideal_op(ideal_op, gens, ideal_gens, other_gens);
    } else if (hinv->parsed()) {
      emit(json(numsemi::h_invariant(ideal_arg(semigroup_of(gens), ideal_gens))));
    } else if (ptrace->parsed()) {
      emit(numsemi::to_json(numsemi::monomial_partial_trace(ideal_arg(semigroup_of(gens), ideal_gens))));
    } else if (trace->parsed()) {
      emit(numsemi::to_json(numsemi::trace(ideal_arg(semigroup_of(gens), ideal_gens))));
    } else if (classify->parsed()) {
      emit(numsemi::to_json(numsemi::classify(semigroup_of(gens), bg_bound)));
    } else if (herzog->parsed()) {
      emit(numsemi::to_json(numsemi::structure_matrix(semigroup_of(gens))));
    } else if (bg->parsed()) {
      SemigroupPtr H = semigroup_of(gens);
      Int bound = 0;
      if (bg_bound) {
        bound = *bg_bound;
      } else if (!H->is_full() && !H->is_symmetric()) {
        bound = numsemi::h_omega(H);
      }
      emit(numsemi::to_json(numsemi::bg_upper_bound(H, bound)));
    } else if (sweep->parsed()) {
      return run_sweep(gen_lists, family, from, to, bg_bound, format, jobs, out_path);
    }
  } catch (const numsemi::Error& e) {
    json j;
    j["error"] = e.name();
    j["message"] = e.what();
    std::cout << j.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json j;
    j["error"] = "InternalInconsistency";
    j["message"] = e.what();
    std::cout << j.dump() << "\n";
    return 1;
  }
  return 0;
}
