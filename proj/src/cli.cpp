#include "arr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "arr/arrangement.hpp"
#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/formulas.hpp"
#include "arr/holonomy.hpp"
#include "arr/jump_loci.hpp"
#include "arr/milnor.hpp"
#include "arr/os_algebra.hpp"
#include "arr/parse.hpp"

namespace arr::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string builtin;
  std::string file;
  std::size_t max = 0;  // 0: per-command default
  std::int64_t depth = 1;
  std::vector<std::int64_t> mult;
  bool separated = false;
  bool json_format = false;
  bool table_format = false;
  std::uint64_t seed = 20240601;
  std::size_t ceiling = 200000;
  bool exact = false;
  int random_cases = 10;
};

struct Input {
  Arrangement arrangement;
  std::optional<SimpleGraph> graph;
  std::string source;
};

struct Report {
  json result = json::object();
  json hypotheses = json::object();
  bool modular_only = false;
};

/// Thrown by handlers after the report is complete, to signal a failed check.
struct CheckFailed {
  Report report;
};

std::vector<std::int64_t> parse_params(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(",-", pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw CatalogError("bad builtin parameter '" + std::string(token) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::optional<SimpleGraph> graph_of_builtin(const std::string& name, const std::vector<std::int64_t>& params) {
  if (name == "graphic") {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < params.size(); i += 2) {
      edges.emplace_back(params[i], params[i + 1]);
      vertices = std::max<std::size_t>({vertices, static_cast<std::size_t>(params[i]) + 1,
                                        static_cast<std::size_t>(params[i + 1]) + 1});
    }
    return SimpleGraph(vertices, edges);
  }
  if (name == "braid" && !params.empty() && params[0] > 3)
    return SimpleGraph::complete(static_cast<std::size_t>(params[0] + 1));
  return std::nullopt;
}

Input load_builtin(const std::string& key) {
  const auto colon = key.find(':');
  const std::string name = key.substr(0, colon);
  const std::vector<std::int64_t> params =
      colon == std::string::npos ? std::vector<std::int64_t>{} : parse_params(std::string_view(key).substr(colon + 1));
  return Input{builtin(name, params), graph_of_builtin(name, params), "builtin:" + key};
}

Input load_input(const Config& cfg) {
  if (!cfg.builtin.empty() && !cfg.file.empty()) throw Error("give either --builtin or --file, not both");
  if (!cfg.builtin.empty()) return load_builtin(cfg.builtin);
  if (cfg.file.empty()) throw Error("an arrangement is required (--builtin NAME[:params] or --file PATH)");
  std::ifstream in(cfg.file);
  if (!in) throw Error("cannot read '" + cfg.file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Input{parse_arrangement(buffer.str()), std::nullopt, "file:" + cfg.file};
}

EngineOptions engine_options(const Config& cfg) {
  EngineOptions options;
  options.ceiling = cfg.ceiling;
  options.rank.seed = cfg.seed;
  options.rank.allow_modular = !cfg.exact;
  return options;
}

json big_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json separation_json(Separation s) { return s == Separation::asserted ? "asserted" : "unasserted"; }

json components_json(const auto& components) {
  json out = json::array();
  for (const auto& c : components) out.push_back({{"support", c.support}, {"dimension", c.dimension}});
  return out;
}

json ranks_array(const RankTable& t) {
  json out = json::array();
  for (const auto& [k, v] : t.values) out.push_back(v);
  return out;
}

std::vector<std::int64_t> unit_multiplicities(const Arrangement& a) { return std::vector<std::int64_t>(a.size(), 1); }

// --- subcommands -----------------------------------------------------------

Report cmd_info(const Input& in, const Config&) {
  const auto& a = in.arrangement;
  const auto l2 = compute_l2(a);
  const auto b = betti(l2);
  Report r;
  r.result = {{"n", a.size()},
              {"ambient_dim", a.ambient_dim()},
              {"rank", arrangement_rank(a)},
              {"betti", {1, b.b1, b.b2}},
              {"multiple_points", l2.multiple_points().size()},
              {"max_mobius", l2.max_mobius()},
              {"graphic", in.graph.has_value()}};
  return r;
}

Report cmd_l2(const Input& in, const Config&) {
  Report r;
  r.result = to_json(compute_l2(in.arrangement));
  return r;
}

Report cmd_betti(const Input& in, const Config&) {
  const auto b = betti(in.arrangement);
  Report r;
  r.result = {{"b0", 1}, {"b1", b.b1}, {"b2", b.b2}};
  return r;
}

Report cmd_holonomy(const Input& in, const Config& cfg) {
  const std::size_t kmax = cfg.max ? cfg.max : 4;
  const auto ranks = holonomy_ranks(in.arrangement, kmax, engine_options(cfg));
  Report r;
  r.result = {{"max", kmax}, {"ranks", ranks.values}};
  r.modular_only = ranks.modular_only;
  return r;
}

Report cmd_decomp(const Input& in, const Config& cfg) {
  const auto d = is_decomposable(in.arrangement, engine_options(cfg));
  json torsion = json::array();
  for (const auto& t : d.torsion) torsion.push_back(big_to_json(t));
  Report r;
  r.result = {{"rational", d.rational},
              {"integral", d.integral},
              {"h3_rank", d.h3_rank},
              {"local_rank", d.local_rank},
              {"torsion", torsion}};
  return r;
}

Report cmd_lcs(const Input& in, const Config& cfg) {
  const std::size_t kmax = cfg.max ? cfg.max : 5;
  const auto options = engine_options(cfg);
  Report r;
  if (in.graph) {
    const auto t = graphic_lcs(*in.graph, kmax);
    r.result = {{"max", kmax}, {"ranks", ranks_array(t)}, {"method", "graphic"}};
    r.hypotheses = {{"graphic", true}};
    return r;
  }
  const auto d = is_decomposable(in.arrangement, options);
  if (d.rational) {
    const auto t = lcs_ranks_decomposable(in.arrangement, kmax, options);
    r.result = {{"max", kmax}, {"ranks", ranks_array(t)}, {"method", "product_formula"}};
    r.hypotheses = {{"q_decomposable", true}};
    return r;
  }
  const auto ranks = holonomy_ranks(in.arrangement, kmax, options);
  r.result = {{"max", kmax}, {"ranks", ranks.values}, {"method", "holonomy"}};
  r.hypotheses = {{"q_decomposable", false}};
  r.modular_only = ranks.modular_only;
  return r;
}

Report cmd_chen(const Input& in, const Config& cfg) {
  const std::size_t kmax = cfg.max ? cfg.max : 4;
  const auto options = engine_options(cfg);
  Report r;
  const auto d = is_decomposable(in.arrangement, options);
  if (d.rational) {
    const auto t = chen_table_decomposable(in.arrangement, kmax, options);
    r.result = {{"max", kmax}, {"ranks", ranks_array(t)}, {"method", "local_formula"}};
    r.hypotheses = {{"q_decomposable", true}};
    return r;
  }
  json ranks = json::array({in.arrangement.size()});
  if (kmax >= 2) {
    const auto dims = infinitesimal_alexander_dims(in.arrangement, kmax - 2, options);
    for (auto v : dims.values) ranks.push_back(v);
    r.modular_only = dims.modular_only;
  }
  r.result = {{"max", kmax}, {"ranks", ranks}, {"method", "infinitesimal_alexander"},
              {"lower_bound", json::array()}};
  for (std::size_t k = 2; k <= kmax; ++k)
    r.result["lower_bound"].push_back(chen_lower_bound(in.arrangement, static_cast<std::int64_t>(k)));
  r.hypotheses = {{"q_decomposable", false}};
  return r;
}

Report cmd_resonance(const Input& in, const Config& cfg) {
  const auto comps = resonance_components(in.arrangement, cfg.depth, engine_options(cfg));
  Report r;
  r.result = {{"depth", cfg.depth}, {"components", components_json(comps)}};
  r.hypotheses = {{"q_decomposable", true}};
  return r;
}

Report cmd_charvar(const Input& in, const Config& cfg) {
  const auto c = characteristic_components(in.arrangement, cfg.depth,
                                           cfg.separated ? Separation::asserted : Separation::unasserted,
                                           engine_options(cfg));
  Report r;
  r.result = {{"depth", cfg.depth}, {"components", components_json(c.components)}};
  r.hypotheses = {{"q_decomposable", c.hypotheses.q_decomposable},
                  {"separated", separation_json(c.hypotheses.separated)}};
  return r;
}

json milnor_json(const MilnorReport& m) {
  json eig = json::object();
  for (const auto& [j, v] : m.eigen_multiplicities) eig[std::to_string(j)] = v;
  return {{"order", m.order}, {"b1", m.b1}, {"eigen_multiplicities", eig}, {"trivial_monodromy", m.trivial_monodromy}};
}

MultiArrangement multi_of(const Input& in, const Config& cfg) {
  auto m = cfg.mult.empty() ? unit_multiplicities(in.arrangement) : cfg.mult;
  if (m.size() != in.arrangement.size())
    throw Error("--mult needs " + std::to_string(in.arrangement.size()) + " entries, got " + std::to_string(m.size()));
  return MultiArrangement(in.arrangement, m);
}

Report cmd_milnor(const Input& in, const Config& cfg) {
  const auto ma = multi_of(in, cfg);
  const auto options = engine_options(cfg);
  const auto m = milnor_b1(ma, cfg.separated ? Separation::asserted : Separation::unasserted, options);
  Report r;
  r.result = milnor_json(m);
  r.result["criterion"] = monodromy_trivial_criterion(ma, options);
  r.hypotheses = {{"q_decomposable", m.hypotheses.q_decomposable},
                  {"separated", separation_json(m.hypotheses.separated)}};
  return r;
}

// --- check -----------------------------------------------------------------

struct Checker {
  json entries = json::array();
  int failures = 0;

  void expect(const std::string& source, const std::string& what, const json& lhs, const json& rhs) {
    const bool ok = lhs == rhs;
    if (!ok) ++failures;
    entries.push_back({{"arrangement", source}, {"check", what}, {"lhs", lhs}, {"rhs", rhs}, {"ok", ok}});
  }
};

void check_arrangement(Checker& checker, const Input& in, std::size_t kmax, const EngineOptions& options) {
  const auto& a = in.arrangement;
  const auto& src = in.source;
  const auto l2 = compute_l2(a);
  const auto n = static_cast<std::int64_t>(a.size());
  const auto holo = holonomy_ranks(a, std::max<std::size_t>(kmax, 3), options);

  checker.expect(src, "falk_phi3 = holonomy_rank(3)", falk_phi3(a, options), holo.at(3));
  std::int64_t sum_binom = 0;
  for (const auto& f : l2.flats) sum_binom += binomial(f.mobius, 2);
  checker.expect(src, "holonomy_rank(2) = sum binom(mu,2)", holo.at(2), sum_binom);
  checker.expect(src, "rank(I2) = binom(n,2) - b2", i2_basis(l2).rank, binomial(n, 2) - betti(l2).b2);
  checker.expect(src, "holonomy_rank(2) = rank(I2)", holo.at(2), i2_basis(l2).rank);

  const auto d = is_decomposable(a, options);
  checker.expect(src, "decomposable: local rank", d.local_rank, local_h3_rank(l2));
  if (d.rational) {
    const auto lcs = lcs_ranks_decomposable(a, kmax, options);
    for (std::size_t k = 1; k <= kmax; ++k)
      checker.expect(src, "lcs product formula k=" + std::to_string(k), lcs.values.at(static_cast<std::int64_t>(k)),
                     holo.at(k));
    const std::size_t chen_max = std::max<std::size_t>(kmax, 2);
    const auto chen = chen_table_decomposable(a, chen_max, options);
    const auto dims = infinitesimal_alexander_dims(a, chen_max - 2, options);
    for (std::size_t k = 2; k <= chen_max; ++k) {
      checker.expect(src, "chen formula vs alexander k=" + std::to_string(k),
                     chen.values.at(static_cast<std::int64_t>(k)), dims.values.at(k - 2));
      checker.expect(src, "chen from resonance k=" + std::to_string(k),
                     chen_ranks_from_resonance(a, static_cast<std::int64_t>(k), options),
                     chen.values.at(static_cast<std::int64_t>(k)));
    }
  } else {
    const auto dims = infinitesimal_alexander_dims(a, 0, options);
    checker.expect(src, "chen k=2 equals lower bound", dims.values.at(0), chen_lower_bound(l2, 2));
  }
  if (in.graph) {
    const auto g = graphic_lcs(*in.graph, kmax);
    for (std::size_t k = 1; k <= kmax; ++k)
      checker.expect(src, "graphic lcs k=" + std::to_string(k), g.values.at(static_cast<std::int64_t>(k)), holo.at(k));
    const auto kappa = clique_counts(*in.graph);
    checker.expect(src, "graphic: decomposable iff K4-free", d.rational, kappa.size() < 4 || kappa[3] == 0);
  }
  if (a.size() <= 7) {
    const auto meta = infinitesimal_alexander_dims(a, 1, options, AlexanderRoute::metabelian);
    const auto lie = infinitesimal_alexander_dims(a, 1, options, AlexanderRoute::lyndon);
    checker.expect(src, "alexander routes agree", meta.values, lie.values);
  }
  const MultiArrangement unit(a, unit_multiplicities(a));
  checker.expect(src, "milnor sweep per character = per flat", milnor_local_bound(unit).b1, milnor_b1_by_flats(unit));
}

Input random_rank3(std::mt19937_64& rng, std::size_t hyperplanes, int index) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (;;) {
    std::vector<Normal> normals;
    for (std::size_t i = 0; i < hyperplanes; ++i) normals.push_back({coeff(rng), coeff(rng), coeff(rng)});
    try {
      Arrangement a(3, normals);
      if (arrangement_rank(a) != 3) continue;
      return Input{a, std::nullopt, "random:" + std::to_string(index)};
    } catch (const Error&) {
    }
  }
}

Report cmd_check(const std::optional<Input>& in, const Config& cfg) {
  const auto options = engine_options(cfg);
  const std::size_t kmax = cfg.max ? cfg.max : 3;
  Checker checker;
  if (in) {
    check_arrangement(checker, *in, kmax, options);
  } else {
    for (const char* key : {"braid", "x3", "x2", "nonpappus", "pappus", "split_solvable:2,3", "split_solvable:3,4",
                             "graphic:0-1,1-2,2-0,2-3", "braid:4"})
      check_arrangement(checker, load_builtin(key), kmax, options);
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.random_cases; ++i) check_arrangement(checker, random_rank3(rng, 6, i), kmax, options);
  }
  Report r;
  r.result = {{"checks", checker.entries.size()}, {"failures", checker.failures}, {"entries", checker.entries}};
  r.hypotheses = {{"seed", cfg.seed}};
  if (checker.failures) throw CheckFailed{r};
  return r;
}

// --- rendering -------------------------------------------------------------

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_table(const json& doc) {
  std::ostringstream os;
  if (doc.contains("arrangement") && doc["arrangement"].is_object()) {
    const auto& a = doc["arrangement"];
    os << "arrangement: " << scalar_text(a.value("source", json("-"))) << "  n=" << a["normals"].size()
       << "  dim=" << a["ambient_dim"] << '\n';
  }
  for (const auto& [key, value] : doc["result"].items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << ":\n";
      for (const auto& row : value) {
        os << ' ';
        for (const auto& [k, v] : row.items()) os << ' ' << k << '=' << scalar_text(v);
        os << '\n';
      }
    } else if (value.is_array()) {
      os << key << ':';
      for (const auto& v : value) os << ' ' << scalar_text(v);
      os << '\n';
    } else {
      os << key << ": " << scalar_text(value) << '\n';
    }
  }
  for (const auto& [key, value] : doc["hypotheses"].items()) os << "hypothesis " << key << ": " << scalar_text(value) << '\n';
  if (doc["verification"].value("modular_only", false)) os << "note: ranks verified modulo random primes only\n";
  return os.str();
}

json document(const std::optional<Input>& in, const Report& r) {
  json doc = {{"tool_version", tool_version}, {"schema_version", schema_version}};
  if (in) {
    doc["arrangement"] = to_json(in->arrangement);
    doc["arrangement"]["source"] = in->source;
  } else {
    doc["arrangement"] = nullptr;
  }
  doc["result"] = r.result;
  doc["hypotheses"] = r.hypotheses;
  doc["verification"] = {{"modular_only", r.modular_only}};
  return doc;
}

std::string emit(const json& doc, const Config& cfg) {
  return cfg.table_format ? render_table(doc) : doc.dump(2) + "\n";
}

// Extra stdout payload when a hypothesis refusal happens.
json refusal_document(const std::string& command, const std::optional<Input>& in, const Config& cfg,
                      const std::string& kind, const std::string& message) {
  json doc = {{"tool_version", tool_version}, {"schema_version", schema_version},
              {"error", {{"kind", kind}, {"message", message}}}};
  if (in) doc["arrangement"] = to_json(in->arrangement), doc["arrangement"]["source"] = in->source;
  if (command == "milnor" && in) {
    try {
      const auto bound = milnor_local_bound(multi_of(*in, cfg));
      doc["advisory"] = {{"local_lower_bound", milnor_json(bound)}};
    } catch (const std::exception&) {
    }
  }
  return doc;
}

}  // namespace

RunOutput run(const std::vector<std::string>& argv) {
  RunOutput output;
  Config cfg;
  CLI::App app{"Invariants of central hyperplane arrangements over Q", "arr"};
  app.set_version_flag("--version", tool_version);
  app.require_subcommand(1, 1);

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"info", "size, rank and Betti summary"},
      {"l2", "rank-2 flats with multiplicities"},
      {"betti", "Betti numbers of the complement"},
      {"holonomy", "graded ranks of the holonomy Lie algebra"},
      {"decomp", "decomposability of the degree-3 holonomy group"},
      {"lcs", "lower central series ranks"},
      {"chen", "Chen ranks"},
      {"resonance", "resonance variety components"},
      {"charvar", "characteristic variety components through the identity"},
      {"milnor", "first Betti number of the Milnor fiber"},
      {"check", "cross-check closed formulas against linear algebra"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* b = sub->add_option("--builtin", cfg.builtin, "catalog arrangement NAME[:params]");
    auto* f = sub->add_option("--file", cfg.file, "polynomial or JSON arrangement file");
    b->excludes(f);
    sub->add_option("--max", cfg.max, "largest degree")->check(CLI::PositiveNumber);
    sub->add_option("--depth", cfg.depth, "jump locus depth s")->check(CLI::PositiveNumber);
    sub->add_option("--mult", cfg.mult, "multiplicities a,b,...")->delimiter(',');
    sub->add_flag("--assert-separated", cfg.separated, "assert the Alexander invariant is separated");
    auto* j = sub->add_flag("--json", cfg.json_format, "JSON output (default)");
    auto* t = sub->add_flag("--table", cfg.table_format, "plain text output");
    j->excludes(t);
    sub->add_option("--seed", cfg.seed, "seed for random primes and random cases");
    sub->add_flag("--exact", cfg.exact, "never fall back to modular ranks");
    sub->add_option("--ceiling", cfg.ceiling, "largest graded dimension")->check(CLI::Range(1000, 1 << 30));
    if (std::string(name) == "check") sub->add_option("--random", cfg.random_cases, "random rank-3 cases")->check(CLI::NonNegativeNumber);
  }

  std::vector<const char*> cargs;
  for (const auto& s : argv) cargs.push_back(s.c_str());
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    output.out = out.str();
    output.err = err.str();
    output.status = code == 0 ? exit_ok : exit_input_error;
    return output;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::map<std::string, std::function<Report(const Input&, const Config&)>> handlers = {
      {"info", cmd_info},         {"l2", cmd_l2},       {"betti", cmd_betti},         {"holonomy", cmd_holonomy},
      {"decomp", cmd_decomp},     {"lcs", cmd_lcs},     {"chen", cmd_chen},           {"resonance", cmd_resonance},
      {"charvar", cmd_charvar},   {"milnor", cmd_milnor},
  };

  std::optional<Input> input;
  auto fail = [&](int status, const std::string& message) {
    output.status = status;
    output.err = "arr " + command + ": " + message + "\n";
  };
  try {
    if (command != "check" || !cfg.builtin.empty() || !cfg.file.empty()) input = load_input(cfg);
    const Report r = command == "check" ? cmd_check(input, cfg) : handlers.at(command)(*input, cfg);
    output.out = emit(document(input, r), cfg);
  } catch (const CheckFailed& e) {
    output.out = emit(document(input, e.report), cfg);
    fail(exit_check_failed, std::to_string(e.report.result["failures"].get<int>()) + " check(s) failed");
  } catch (const HypothesisError& e) {
    output.out = refusal_document(command, input, cfg, "hypothesis", e.what()).dump(2) + "\n";
    fail(exit_hypothesis, std::string("hypothesis not satisfied: ") + e.what());
  } catch (const RefusalError& e) {
    output.out = refusal_document(command, input, cfg, "refusal", e.what()).dump(2) + "\n";
    fail(exit_hypothesis, std::string("refused: ") + e.what());
  } catch (const ResourceError& e) {
    fail(exit_resource, std::string("resource ceiling: ") + e.what());
  } catch (const ParseError& e) {
    fail(exit_input_error, std::string("parse error (") + to_string(e.kind()) + "): " + e.what());
  } catch (const std::exception& e) {
    fail(exit_input_error, e.what());
  }
  return output;
}

}  // namespace arr::cli
