#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxanc/coxeter_system.hpp"
#include "coxanc/error.hpp"
#include "coxanc/group_table.hpp"

namespace coxanc {

// Per-element results of one pass over a finite group: the maximal
// involution prefixes of every element, and the involution length where the
// ancestor decomposition is well defined.
struct GroupAnalysis {
  // |A(w)|; 0 for the identity.
  std::vector<std::uint16_t> ancestor_count;
  // upr(w) when |A(w)| = 1, otherwise the smallest witness.
  std::vector<ElementId> ancestor;
  // -1 where some step of the decomposition is ambiguous.
  std::vector<std::int16_t> ilen;
  // Elements with |A(w)| > 1, ascending, with all maximal witnesses.
  std::vector<std::pair<ElementId, std::vector<ElementId>>> ambiguous;
};

// Every element is tested against the precomputed involution list: t is a
// prefix of w when l(t) + l(tw) = l(w). Ids are split into contiguous
// blocks across `workers` threads (0 = hardware concurrency); the result is
// independent of the worker count.
GroupAnalysis analyze_group(const GroupTable& t, unsigned workers = 0);

struct Counterexample {
  Word element;
  std::vector<Word> witnesses;
};

struct AncestorPropertyResult {
  bool holds = true;
  std::vector<Counterexample> counterexamples;
};

struct IlenBoundResult {
  bool holds = true;
  int max_ilen = 0;
  std::map<int, std::uint64_t> histogram;
  // Elements whose decomposition hits an ambiguous step; excluded from the
  // histogram and the bound.
  std::uint64_t undefined = 0;
};

AncestorPropertyResult verify_ancestor_property(const GroupTable& t, const GroupAnalysis& a);
AncestorPropertyResult verify_ancestor_property(const GroupTable& t, unsigned workers = 0);
IlenBoundResult verify_ilen_bound(const GroupTable& t, const GroupAnalysis& a, int rank);
IlenBoundResult verify_ilen_bound(const GroupTable& t, int rank, unsigned workers = 0);

// Elements whose prefix and suffix involution lengths differ. The suffix
// length of w is the prefix length of w^{-1}.
std::uint64_t suffix_ilen_mismatches(const GroupTable& t, const GroupAnalysis& a);

struct ReportError {
  ErrorKind kind;
  std::string message;
};

struct ConjectureReport {
  SystemSpec spec;
  std::uint64_t group_order = 0;
  bool conjecture1_holds = false;
  std::vector<Counterexample> conjecture1_counterexamples;
  bool conjecture2_holds = false;
  int max_ilen = 0;
  int rank = 0;
  std::map<int, std::uint64_t> ilen_histogram;
  std::uint64_t undefined_ilen = 0;
  std::uint64_t suffix_ilen_mismatches = 0;
  double elapsed_seconds = 0.0;
  std::optional<ReportError> error;

  bool passed() const { return !error && conjecture1_holds && conjecture2_holds; }
};

struct SweepOptions {
  unsigned workers = 0;
  std::uint64_t order_guard = kDefaultOrderGuard;
  int root_cap = kDefaultRootCap;
};

ConjectureReport verify_spec(const SystemSpec& spec, const SweepOptions& options = {});

// Specs run one after another; a failing spec yields an error report and the
// sweep continues.
std::vector<ConjectureReport> sweep(const std::vector<SystemSpec>& specs,
                                    const SweepOptions& options = {});

// "paper": A1-A7, B2-B6, D4-D6, E6, F4, H3, H4, I2(3)-I2(50).
// Throws UnknownType for other names.
std::vector<SystemSpec> preset_specs(std::string_view name);

nlohmann::json to_json(const ConjectureReport& r, bool include_timing = true);
nlohmann::json to_json(const std::vector<ConjectureReport>& reports, bool include_timing = true);
std::string to_csv(const std::vector<ConjectureReport>& reports);
std::string to_text(const std::vector<ConjectureReport>& reports);

}  // namespace coxanc
