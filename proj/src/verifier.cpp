#include "coxanc/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

namespace coxanc {

namespace {

// Involutions bucketed by length, each with its canonical word stored flat.
struct InvolutionIndex {
  std::vector<std::vector<ElementId>> by_length;
  std::vector<std::uint32_t> word_offset;  // indexed by element id
  std::vector<Generator> letters;

  explicit InvolutionIndex(const GroupTable& t) {
    int longest = t.length(t.longest_element());
    by_length.resize(longest + 1);
    word_offset.assign(t.order(), 0);
    for (ElementId w = 0; w < t.order(); ++w) {
      if (!t.is_involution(w)) continue;
      by_length[t.length(w)].push_back(w);
      word_offset[w] = static_cast<std::uint32_t>(letters.size());
      Word word = t.canonical_reduced_word(w);
      letters.insert(letters.end(), word.begin(), word.end());
    }
  }

  // t.w when the involution u is a prefix of w (every letter of u, read left
  // to right, is a left descent of what remains), else nullopt.
  std::optional<ElementId> strip(const GroupTable& t, ElementId u, ElementId w) const {
    const Generator* letter = letters.data() + word_offset[u];
    for (int k = t.length(u); k > 0; --k, ++letter) {
      if (!t.has_left_descent(w, *letter)) return std::nullopt;
      w = t.left_mul(w, *letter);
    }
    return w;
  }
};

struct BlockResult {
  std::vector<std::pair<ElementId, std::vector<ElementId>>> ambiguous;
};

void analyze_block(const GroupTable& t, const InvolutionIndex& index, ElementId begin,
                   ElementId end, GroupAnalysis& out, std::vector<ElementId>& residual,
                   BlockResult& block) {
  std::vector<ElementId> hits;
  for (ElementId w = begin; w < end; ++w) {
    if (w == kIdentity) continue;
    hits.clear();
    ElementId first_residual = kIdentity;
    for (int len = t.length(w); len > 0 && hits.empty(); --len) {
      for (ElementId u : index.by_length[len]) {
        if (auto rest = index.strip(t, u, w)) {
          if (hits.empty()) first_residual = *rest;
          hits.push_back(u);
        }
      }
    }
    out.ancestor_count[w] = static_cast<std::uint16_t>(hits.size());
    out.ancestor[w] = hits.front();
    residual[w] = first_residual;
    if (hits.size() > 1) block.ambiguous.emplace_back(w, hits);
  }
}

std::vector<Word> words_of(const GroupTable& t, const std::vector<ElementId>& ids) {
  std::vector<Word> out;
  out.reserve(ids.size());
  for (ElementId id : ids) out.push_back(t.canonical_reduced_word(id));
  return out;
}

}  // namespace

GroupAnalysis analyze_group(const GroupTable& t, unsigned workers) {
  const auto order = static_cast<ElementId>(t.order());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, order);

  InvolutionIndex index(t);
  GroupAnalysis a;
  a.ancestor_count.assign(order, 0);
  a.ancestor.assign(order, kIdentity);
  a.ilen.assign(order, 0);
  std::vector<ElementId> residual(order, kIdentity);

  std::vector<BlockResult> blocks(workers);
  std::vector<std::thread> threads;
  const ElementId step = (order + workers - 1) / workers;
  for (unsigned k = 0; k < workers; ++k) {
    ElementId begin = std::min<ElementId>(order, k * step);
    ElementId end = std::min<ElementId>(order, begin + step);
    if (workers == 1) {
      analyze_block(t, index, begin, end, a, residual, blocks[k]);
    } else {
      threads.emplace_back([&, begin, end, k] {
        analyze_block(t, index, begin, end, a, residual, blocks[k]);
      });
    }
  }
  for (auto& th : threads) th.join();

  // Blocks are contiguous and ascending, so concatenation keeps id order.
  for (auto& b : blocks) {
    for (auto& entry : b.ambiguous) a.ambiguous.push_back(std::move(entry));
  }

  // The residual is strictly shorter, hence has a smaller id.
  for (ElementId w = 1; w < order; ++w) {
    std::int16_t below = a.ilen[residual[w]];
    a.ilen[w] = a.ancestor_count[w] == 1 && below >= 0 ? static_cast<std::int16_t>(below + 1)
                                                       : std::int16_t{-1};
  }
  return a;
}

AncestorPropertyResult verify_ancestor_property(const GroupTable& t, const GroupAnalysis& a) {
  AncestorPropertyResult r;
  for (const auto& [w, witnesses] : a.ambiguous) {
    r.counterexamples.push_back({t.canonical_reduced_word(w), words_of(t, witnesses)});
  }
  r.holds = r.counterexamples.empty();
  return r;
}

AncestorPropertyResult verify_ancestor_property(const GroupTable& t, unsigned workers) {
  return verify_ancestor_property(t, analyze_group(t, workers));
}

IlenBoundResult verify_ilen_bound(const GroupTable& t, const GroupAnalysis& a, int rank) {
  IlenBoundResult r;
  for (ElementId w = 0; w < t.order(); ++w) {
    if (a.ilen[w] < 0) {
      ++r.undefined;
      continue;
    }
    ++r.histogram[a.ilen[w]];
    r.max_ilen = std::max<int>(r.max_ilen, a.ilen[w]);
  }
  r.holds = r.max_ilen <= rank;
  return r;
}

IlenBoundResult verify_ilen_bound(const GroupTable& t, int rank, unsigned workers) {
  return verify_ilen_bound(t, analyze_group(t, workers), rank);
}

std::uint64_t suffix_ilen_mismatches(const GroupTable& t, const GroupAnalysis& a) {
  std::uint64_t count = 0;
  for (ElementId w = 0; w < t.order(); ++w) {
    auto prefix = a.ilen[w];
    auto suffix = a.ilen[t.inverse(w)];
    if (prefix >= 0 && suffix >= 0 && prefix != suffix) ++count;
  }
  return count;
}

ConjectureReport verify_spec(const SystemSpec& spec, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport r;
  r.spec = spec;
  r.rank = spec.rank;
  try {
    GroupTable table = build_group_table(build_matrix(spec), options.order_guard, options.root_cap);
    r.group_order = table.order();
    GroupAnalysis analysis = analyze_group(table, options.workers);
    AncestorPropertyResult c1 = verify_ancestor_property(table, analysis);
    IlenBoundResult c2 = verify_ilen_bound(table, analysis, spec.rank);
    r.conjecture1_holds = c1.holds;
    r.conjecture1_counterexamples = std::move(c1.counterexamples);
    r.conjecture2_holds = c2.holds;
    r.max_ilen = c2.max_ilen;
    r.ilen_histogram = std::move(c2.histogram);
    r.undefined_ilen = c2.undefined;
    r.suffix_ilen_mismatches = suffix_ilen_mismatches(table, analysis);
  } catch (const Error& e) {
    r.error = ReportError{e.kind(), e.what()};
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<ConjectureReport> sweep(const std::vector<SystemSpec>& specs,
                                    const SweepOptions& options) {
  std::vector<ConjectureReport> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(verify_spec(spec, options));
  return out;
}

std::vector<SystemSpec> preset_specs(std::string_view name) {
  if (name != "paper") {
    throw Error(ErrorKind::UnknownType, "unknown preset '" + std::string(name) + "'");
  }
  std::vector<std::string> names;
  for (int n = 1; n <= 7; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) names.push_back("B" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) names.push_back("D" + std::to_string(n));
  for (const char* s : {"E6", "F4", "H3", "H4"}) names.emplace_back(s);
  for (int m = 3; m <= 50; ++m) names.push_back("I2(" + std::to_string(m) + ")");
  std::vector<SystemSpec> specs;
  for (const auto& n : names) specs.push_back(parse_spec(n));
  return specs;
}

nlohmann::json to_json(const ConjectureReport& r, bool include_timing) {
  nlohmann::json j;
  j["spec"] = r.spec.descriptor;
  std::vector<std::string> tags;
  for (const auto& c : r.spec.components) tags.push_back(c.tag);
  j["components"] = tags;
  j["rank"] = r.rank;
  j["status"] = r.error ? "error" : "ok";
  j["group_order"] = r.group_order;
  j["conjecture1_holds"] = r.conjecture1_holds;
  nlohmann::json cx = nlohmann::json::array();
  for (const auto& c : r.conjecture1_counterexamples) {
    std::vector<std::string> witnesses;
    for (const auto& w : c.witnesses) witnesses.push_back(format_word(w));
    cx.push_back({{"word", format_word(c.element)}, {"witnesses", witnesses}});
  }
  j["conjecture1_counterexamples"] = cx;
  j["conjecture2_holds"] = r.conjecture2_holds;
  j["max_ilen"] = r.max_ilen;
  nlohmann::json hist = nlohmann::json::object();
  for (auto [ilen, count] : r.ilen_histogram) hist[std::to_string(ilen)] = count;
  j["ilen_histogram"] = hist;
  j["undefined_ilen"] = r.undefined_ilen;
  j["suffix_ilen_mismatches"] = r.suffix_ilen_mismatches;
  if (r.error) {
    j["error"] = {{"kind", std::string(to_string(r.error->kind))}, {"message", r.error->message}};
  } else {
    j["error"] = nullptr;
  }
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

nlohmann::json to_json(const std::vector<ConjectureReport>& reports, bool include_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
  return {{"reports", arr}};
}

namespace {

const char* verdict(const ConjectureReport& r, bool holds) {
  if (r.error) return "error";
  return holds ? "pass" : "fail";
}

}  // namespace

std::string to_csv(const std::vector<ConjectureReport>& reports) {
  std::ostringstream out;
  out << "spec,order,conj1,conj2,max_ilen,rank,seconds\n";
  for (const auto& r : reports) {
    out << r.spec.descriptor << ',' << r.group_order << ',' << verdict(r, r.conjecture1_holds)
        << ',' << verdict(r, r.conjecture2_holds) << ',' << r.max_ilen << ',' << r.rank << ','
        << std::fixed << std::setprecision(3) << r.elapsed_seconds << '\n';
  }
  return out.str();
}

std::string to_text(const std::vector<ConjectureReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.spec.descriptor << " (rank " << r.rank << ")\n";
    if (r.error) {
      out << "  error: " << to_string(r.error->kind) << ": " << r.error->message << "\n";
      continue;
    }
    out << "  order: " << r.group_order << "\n";
    out << "  conj1 (ancestor property): " << verdict(r, r.conjecture1_holds) << "\n";
    for (const auto& c : r.conjecture1_counterexamples) {
      out << "    counterexample " << format_word(c.element) << " ancestors:";
      for (const auto& w : c.witnesses) out << ' ' << format_word(w);
      out << "\n";
    }
    out << "  conj2 (ilen <= rank): " << verdict(r, r.conjecture2_holds) << ", max ilen "
        << r.max_ilen << "\n";
    out << "  ilen histogram:";
    for (auto [ilen, count] : r.ilen_histogram) out << ' ' << ilen << ':' << count;
    out << "\n";
    if (r.undefined_ilen > 0) out << "  undefined ilen: " << r.undefined_ilen << "\n";
    out << "  suffix/prefix ilen mismatches: " << r.suffix_ilen_mismatches << "\n";
    out << "  elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s\n";
    out.unsetf(std::ios::fixed);
  }
  return out.str();
}

}  // namespace coxanc
