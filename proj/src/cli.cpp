#include "coxanc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "coxanc/coxeter_elements.hpp"
#include "coxanc/coxeter_system.hpp"
#include "coxanc/error.hpp"
#include "coxanc/graph_analysis.hpp"
#include "coxanc/group_table.hpp"
#include "coxanc/universal_group.hpp"
#include "coxanc/verifier.hpp"
#include "coxanc/weak_order.hpp"
#include "json.hpp"

namespace coxanc {

namespace {

using nlohmann::json;

struct CliConfig {
  std::vector<std::string> specs;
  std::string preset;
  std::string file;
  std::string word;
  bool word_given = false;
  std::string format = "text";
  std::string out_path;
  unsigned workers = 0;
  std::uint64_t order_guard = 0;
  bool orderings = false;
  int n = 0;
  int k = 0;
};

std::uint64_t effective_order_guard(const CliConfig& c) {
  if (c.order_guard > 0) return c.order_guard;
  if (const char* env = std::getenv("COXANC_ORDER_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw Error(ErrorKind::BadLetter, std::string("COXANC_ORDER_GUARD is not a positive integer: ") + env);
  }
  return kDefaultOrderGuard;
}

// Sends the report to --out when given, else to the console stream.
int emit(const CliConfig& c, std::ostream& out, std::ostream& err, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream file(c.out_path);
  if (!file) {
    err << "error: cannot write " << c.out_path << "\n";
    return kExitUsage;
  }
  file << text;
  return kExitPass;
}

std::string render_generators(const std::vector<Generator>& letters) {
  std::string s = "(";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0) s += ' ';
    s += 'r' + std::to_string(letters[k] + 1);
  }
  return s + ")";
}

// Products of distinct commuting generators print in ascending order; any
// other factor prints as its canonical reduced word.
std::string render_factor(const GroupTable& t, ElementId u) {
  VertexSet supp = t.support(u);
  if (supp.size() == t.length(u)) return render_generators(supp.members());
  return render_generators(t.canonical_reduced_word(u));
}

std::string render_factors(const GroupTable& t, const std::vector<ElementId>& factors) {
  std::string s;
  for (ElementId u : factors) s += render_factor(t, u);
  return s.empty() ? "()" : s;
}

std::string render_layers(const std::vector<VertexSet>& layers) {
  std::string s;
  for (VertexSet l : layers) s += render_generators(l.members());
  return s;
}

std::string one_based(const std::vector<Generator>& ordering) { return format_word(ordering); }

json words_json(const GroupTable& t, const std::vector<ElementId>& ids) {
  json arr = json::array();
  for (ElementId id : ids) arr.push_back(format_word(t.canonical_reduced_word(id)));
  return arr;
}

json decomposition_json(const GroupTable& t, const DecompositionOutcome& d) {
  if (auto* amb = std::get_if<Ambiguity>(&d)) {
    return {{"ambiguous", true},
            {"at", format_word(t.canonical_reduced_word(amb->owner))},
            {"witnesses", words_json(t, amb->witnesses)}};
  }
  const auto& dec = std::get<AncestorDecomposition>(d);
  return {{"ambiguous", false},
          {"factors", words_json(t, dec.factors)},
          {"rendered", render_factors(t, dec.factors)},
          {"ilen", dec.ilen()}};
}

std::string decomposition_text(const GroupTable& t, const DecompositionOutcome& d) {
  if (auto* amb = std::get_if<Ambiguity>(&d)) {
    std::string s = "ambiguous at " + format_word(t.canonical_reduced_word(amb->owner)) + ", ancestors";
    for (ElementId u : amb->witnesses) s += ' ' + render_factor(t, u);
    return s;
  }
  return render_factors(t, std::get<AncestorDecomposition>(d).factors);
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.format != "text" && c.format != "json" && c.format != "csv") {
    err << "error: unknown format '" << c.format << "'\n";
    return kExitUsage;
  }
  std::vector<SystemSpec> specs;
  try {
    if (!c.preset.empty()) specs = preset_specs(c.preset);
    for (const auto& d : c.specs) specs.push_back(parse_spec(d));
    if (!c.file.empty()) specs.push_back(parse_spec("file:" + c.file));
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (specs.empty()) {
    err << "error: verify needs --spec, --file or --preset\n";
    return kExitUsage;
  }
  SweepOptions options;
  options.workers = c.workers;
  try {
    options.order_guard = effective_order_guard(c);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<ConjectureReport> reports = sweep(specs, options);

  std::string text;
  if (c.format == "json") {
    text = to_json(reports).dump(2) + "\n";
  } else if (c.format == "csv") {
    text = to_csv(reports);
  } else {
    text = to_text(reports);
    std::size_t passed = std::count_if(reports.begin(), reports.end(),
                                       [](const auto& r) { return r.passed(); });
    text += "summary: " + std::to_string(passed) + "/" + std::to_string(reports.size()) +
            " groups pass both conjectures\n";
  }
  if (int rc = emit(c, out, err, text); rc != kExitPass) return rc;

  bool build_error = false;
  bool counterexample = false;
  for (const auto& r : reports) {
    if (r.error) {
      err << "error: " << r.spec.descriptor << ": " << to_string(r.error->kind) << ": "
          << r.error->message << "\n";
      build_error = true;
    } else if (!r.passed()) {
      counterexample = true;
    }
  }
  if (build_error) return kExitUsage;
  return counterexample ? kExitCounterexample : kExitPass;
}

int cmd_element(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.format != "text" && c.format != "json") {
    err << "error: element supports --format text or json\n";
    return kExitUsage;
  }
  if (c.specs.size() + (c.file.empty() ? 0 : 1) != 1) {
    err << "error: element needs exactly one --spec or --file\n";
    return kExitUsage;
  }
  try {
    SystemSpec spec = parse_spec(c.file.empty() ? c.specs.front() : "file:" + c.file);
    GroupTable t = build_group_table(build_matrix(spec), effective_order_guard(c));
    Word word = parse_word(c.word, spec.rank);
    ElementId w = t.element_from_word(word);

    json j;
    j["spec"] = spec.descriptor;
    j["word"] = format_word(word);
    j["reduced_word"] = format_word(t.canonical_reduced_word(w));
    j["length"] = t.length(w);
    std::vector<int> descents;
    for (Generator g : t.left_descents(w).members()) descents.push_back(g + 1);
    j["descents"] = descents;
    j["is_involution"] = t.is_involution(w);
    j["order"] = t.element_order(w);
    PrefixSet ipref = involution_prefixes(t, w);
    j["involution_prefix_count"] = ipref.members.size();

    bool ambiguous = false;
    std::ostringstream text;
    text << "spec: " << spec.descriptor << "\n"
         << "word: " << format_word(word) << "\n"
         << "reduced word: " << format_word(t.canonical_reduced_word(w)) << "\n"
         << "length: " << t.length(w) << "\n"
         << "descents: " << t.left_descents(w).to_string() << "\n"
         << "involution: " << (t.is_involution(w) ? "yes" : "no") << "\n"
         << "order: " << t.element_order(w) << "\n"
         << "involution prefixes: " << ipref.members.size() << "\n";
    if (w == kIdentity) {
      j["ancestors"] = json::array();
      j["decomposition"] = {{"ambiguous", false}, {"factors", json::array()}, {"rendered", "()"}, {"ilen", 0}};
      j["suffix_decomposition"] = j["decomposition"];
      j["ilen"] = 0;
      j["suffix_ilen"] = 0;
      text << "ancestors: none (identity)\n"
           << "ancestor decomposition: ()\n"
           << "ilen: 0\n"
           << "suffix decomposition: ()\n"
           << "suffix ilen: 0\n";
    } else {
      PrefixSet anc = ancestors(t, w);
      DecompositionOutcome prefix = ancestor_decomposition(t, w);
      DecompositionOutcome suffix = suffix_ancestor_decomposition(t, w);
      ambiguous = anc.members.size() != 1 || std::holds_alternative<Ambiguity>(prefix) ||
                  std::holds_alternative<Ambiguity>(suffix);
      j["ancestors"] = words_json(t, anc.members);
      j["decomposition"] = decomposition_json(t, prefix);
      j["suffix_decomposition"] = decomposition_json(t, suffix);
      text << "ancestors:";
      for (ElementId u : anc.members) text << ' ' << render_factor(t, u);
      text << (anc.members.size() == 1 && anc.members.front() == w ? " (the element itself)" : "")
           << "\n";
      text << "ancestor decomposition: " << decomposition_text(t, prefix) << "\n";
      if (auto* d = std::get_if<AncestorDecomposition>(&prefix)) {
        j["ilen"] = d->ilen();
        text << "ilen: " << d->ilen() << "\n";
      }
      text << "suffix decomposition: " << decomposition_text(t, suffix) << "\n";
      if (auto* d = std::get_if<AncestorDecomposition>(&suffix)) {
        j["suffix_ilen"] = d->ilen();
        text << "suffix ilen: " << d->ilen() << "\n";
      }
    }
    std::string rendered = c.format == "json" ? j.dump(2) + "\n" : text.str();
    if (int rc = emit(c, out, err, rendered); rc != kExitPass) return rc;
    return ambiguous ? kExitCounterexample : kExitPass;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_coxelems(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.format != "text" && c.format != "json") {
    err << "error: coxelems supports --format text or json\n";
    return kExitUsage;
  }
  if (c.specs.size() + (c.file.empty() ? 0 : 1) != 1) {
    err << "error: coxelems needs exactly one --spec or --file\n";
    return kExitUsage;
  }
  try {
    SystemSpec spec = parse_spec(c.file.empty() ? c.specs.front() : "file:" + c.file);
    CoxeterGraph g = graph_of(build_matrix(spec));
    Coloring coloring = chromatic_number(g);
    int longest = longest_path_order(g);
    std::vector<DistinctCoxeterElement> elements = distinct_coxeter_elements(g);
    std::map<int, std::uint64_t> spectrum;
    for (const auto& e : elements) ++spectrum[e.ilen];
    MinIlenWitness min_witness = min_ilen_coxeter_element(g);
    EdgeOrientation min_orientation = orientation_of(g, min_witness.element);
    const DistinctCoxeterElement* max_witness = &elements.front();
    for (const auto& e : elements) {
      if (e.ilen > max_witness->ilen) max_witness = &e;
    }

    json j;
    j["spec"] = spec.descriptor;
    j["rank"] = spec.rank;
    j["chromatic_number"] = coloring.colors;
    json classes = json::array();
    for (VertexSet s : coloring.classes) {
      std::vector<int> members;
      for (Generator v : s.members()) members.push_back(v + 1);
      classes.push_back(members);
    }
    j["coloring"] = classes;
    j["longest_path"] = longest;
    j["bipartite"] = is_bipartite(g);
    j["coxeter_element_count"] = elements.size();
    json spec_json = json::object();
    for (auto [ilen, count] : spectrum) spec_json[std::to_string(ilen)] = count;
    j["ilen_spectrum"] = spec_json;
    j["min_ilen"] = {{"ordering", one_based(min_witness.element.ordering)},
                     {"ilen", min_witness.ilen},
                     {"layers", render_layers(coxeter_ancestor_decomposition(min_orientation))}};
    j["max_ilen"] = {{"ordering", one_based(max_witness->representative.ordering)},
                     {"ilen", max_witness->ilen},
                     {"layers", render_layers(coxeter_ancestor_decomposition(max_witness->orientation))}};

    std::ostringstream text;
    text << "spec: " << spec.descriptor << "\n"
         << "rank: " << spec.rank << "\n"
         << "chromatic number: " << coloring.colors << "\n"
         << "longest path: " << longest << "\n"
         << "bipartite: " << (is_bipartite(g) ? "yes" : "no") << "\n"
         << "coxeter elements: " << elements.size() << "\n"
         << "ilen spectrum:";
    for (auto [ilen, count] : spectrum) text << ' ' << ilen << ':' << count;
    text << "\n"
         << "min ilen " << min_witness.ilen << ": " << one_based(min_witness.element.ordering)
         << " -> " << render_layers(coxeter_ancestor_decomposition(min_orientation)) << "\n"
         << "max ilen " << max_witness->ilen << ": "
         << one_based(max_witness->representative.ordering) << " -> "
         << render_layers(coxeter_ancestor_decomposition(max_witness->orientation)) << "\n";

    if (c.orderings) {
      json list = json::array();
      text << "elements:\n";
      for (const auto& e : elements) {
        std::string layers = render_layers(coxeter_ancestor_decomposition(e.orientation));
        list.push_back({{"ordering", one_based(e.representative.ordering)},
                        {"ilen", e.ilen},
                        {"layers", layers}});
        text << "  " << one_based(e.representative.ordering) << " ilen " << e.ilen << " "
             << layers << "\n";
      }
      j["elements"] = list;
    }
    return emit(c, out, err, c.format == "json" ? j.dump(2) + "\n" : text.str());
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_universal(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.format != "text" && c.format != "json") {
    err << "error: universal supports --format text or json\n";
    return kExitUsage;
  }
  try {
    if (c.n < 1 || c.n > kMaxRank) {
      throw Error(ErrorKind::RankOutOfRange, "--n must lie in 1.." + std::to_string(kMaxRank));
    }
    if (c.k < 1) throw Error(ErrorKind::RankOutOfRange, "--k must be positive");
    FreeWord w = universal_coxeter_power(c.n, c.k);
    std::vector<FreeWord> factors;
    if (!w.empty()) factors = ug_ancestor_decomposition(w);
    const int ilen = static_cast<int>(factors.size());
    const bool exceeds = ilen > c.n;

    std::string rendered;
    json factor_words = json::array();
    for (const auto& f : factors) {
      rendered += render_generators(f.letters());
      factor_words.push_back(format_word(f.letters()));
    }
    if (rendered.empty()) rendered = "()";

    std::string message = exceeds ? "exceeds rank " + std::to_string(c.n)
                          : ilen == c.n ? "equals rank " + std::to_string(c.n)
                                        : "within rank " + std::to_string(c.n);
    if (c.format == "json") {
      json j{{"group", "U" + std::to_string(c.n)},
             {"n", c.n},
             {"k", c.k},
             {"word", format_word(w.letters())},
             {"length", w.length()},
             {"factors", factor_words},
             {"rendered", rendered},
             {"ilen", ilen},
             {"rank", c.n},
             {"exceeds_rank", exceeds}};
      return emit(c, out, err, j.dump(2) + "\n");
    }
    std::ostringstream text;
    text << "group: U" << c.n << "\n"
         << "element: (r1..r" << c.n << ")^" << c.k << " = " << format_word(w.letters()) << "\n"
         << "length: " << w.length() << "\n"
         << "ancestor decomposition: " << rendered << "\n"
         << "ilen: " << ilen << ", " << message << "\n";
    if (exceeds) text << "rank bound violated: ilen " << ilen << " > rank " << c.n << "\n";
    return emit(c, out, err, text.str());
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ancestor decompositions and conjecture sweeps for Coxeter groups", "coxanc"};
  app.require_subcommand(1);
  CliConfig c;

  auto add_format = [&](CLI::App* sub, const std::string& choices) {
    sub->add_option("--format", c.format, "Output format: " + choices);
    sub->add_option("--out", c.out_path, "Write the report to this path instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "Exhaustively check both conjectures");
  verify->add_option("--spec", c.specs, "Group descriptor, e.g. A5, I2(7), A2xB3 (repeatable)");
  verify->add_option("--file", c.file, "Coxeter matrix file");
  verify->add_option("--preset", c.preset, "Named list of groups (paper)");
  verify->add_option("--workers", c.workers, "Worker threads (default: all cores)");
  verify->add_option("--order-guard", c.order_guard, "Maximum group order");
  add_format(verify, "text, json, csv");

  CLI::App* element = app.add_subcommand("element", "Analyse one element");
  element->add_option("--spec", c.specs, "Group descriptor");
  element->add_option("--file", c.file, "Coxeter matrix file");
  element->add_option("--word", c.word, "Comma-separated 1-based generators")->required();
  element->add_option("--order-guard", c.order_guard, "Maximum group order");
  add_format(element, "text, json");

  CLI::App* coxelems = app.add_subcommand("coxelems", "Analyse the Coxeter elements of a graph");
  coxelems->add_option("--spec", c.specs, "Group descriptor");
  coxelems->add_option("--file", c.file, "Coxeter matrix file");
  coxelems->add_flag("--orderings", c.orderings, "List every Coxeter element");
  add_format(coxelems, "text, json");

  CLI::App* universal = app.add_subcommand("universal", "Decompose (r1...rn)^k in U_n");
  universal->add_option("--n", c.n, "Rank")->required();
  universal->add_option("--k", c.k, "Exponent")->required();
  add_format(universal, "text, json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(c, out, err);
  if (element->parsed()) return cmd_element(c, out, err);
  if (coxelems->parsed()) return cmd_coxelems(c, out, err);
  return cmd_universal(c, out, err);
}

}  // namespace coxanc
