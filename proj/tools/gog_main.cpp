#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gog/census.hpp"
#include "gog/connectivity.hpp"
#include "gog/normal_forms.hpp"
#include "gog/oracle.hpp"
#include "gog/reduce.hpp"
#include "gog/spec_io.hpp"

using json = nlohmann::ordered_json;
using namespace gog;

namespace {

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

void emit_json(json j) { emit(j.dump(2) + "\n"); }

// Classical alternating form on an amalgam: G:g H:h G:g' ... denotes a group
// element based at the left vertex, so stable letters bracket every run on
// the right side.
Word parse_amalgam_word(const SpecPtr& spec, const std::string& text) {
  std::istringstream in(text);
  Word w;
  w.spec = spec;
  w.start = 0;
  std::string token;
  int at = 0;
  int last_side = -1;
  while (in >> token) {
    int s = -1;
    if (token.rfind("G:", 0) == 0) s = 0;
    if (token.rfind("H:", 0) == 0) s = 1;
    if (s < 0) fail(errc::parse_error, "expected G:<elt> or H:<elt>, got '" + token + "'");
    if (s == last_side) fail(errc::parse_error, "alternating form cannot repeat a side");
    const std::string digits = token.substr(2);
    Elt value = 0;
    try {
      size_t used = 0;
      value = std::stoi(digits, &used);
      if (used != digits.size() || digits.empty()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad element in '" + token + "'");
    }
    if (s == at && w.syllables.empty()) {
      w.head = value;
    } else {
      w.syllables.push_back({0, at == 0 ? -1 : 1, value});
      at = 1 - at;
    }
    last_side = s;
  }
  if (last_side < 0) fail(errc::parse_error, "empty word");
  if (at == 1) w.syllables.push_back({0, 1, 0});
  try {
    validate_word(w);
  } catch (const error& e) {
    fail(errc::parse_error, e.what());
  }
  return w;
}

Word parse_cli_word(const SpecFile& f, const std::string& from_flag, const std::string& text) {
  if (text.find(':') != std::string::npos) {
    if (f.kind != "amalgam")
      fail(errc::parse_error, "element prefixes G:/H: need an amalgam spec");
    if (!from_flag.empty() && from_flag != "v0")
      fail(errc::parse_error, "alternating words are based at v0");
    return parse_amalgam_word(f.graph, text);
  }
  const Basepoint b = parse_basepoint(from_flag.empty() ? "v0" : from_flag);
  if (b.side != Basepoint::Side::vertex) fail(errc::parse_error, "--from must name a vertex");
  return parse_word(f.graph, b.id, text);
}

int stages_up_to(const StagePattern& pat, int radius) {
  if (pat.first_stage < 0 || pat.first_stage > radius) return 0;
  return (radius - pat.first_stage) / pat.step + 1;
}

std::vector<Basepoint> all_basepoints(const GraphOfGroups& g) {
  std::vector<Basepoint> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(Basepoint::vertex(v));
  for (int e = 0; e < g.edge_count(); ++e) out.push_back(Basepoint::edge(e));
  return out;
}

Word sample_word(const SpecPtr& spec, std::mt19937_64& rng, int max_cross) {
  const GraphOfGroups& g = *spec;
  Word w;
  w.spec = spec;
  w.start = static_cast<int>(rng() % g.vertex_count());
  w.head = static_cast<Elt>(rng() % g.vertex_groups[w.start]->order);
  VertexId at = w.start;
  const int len = static_cast<int>(rng() % (max_cross + 1));
  for (int i = 0; i < len; ++i) {
    const auto& deps = g.departures[at];
    if (deps.empty()) break;
    const Departure d = deps[rng() % deps.size()];
    at = g.arrive_vertex(d.edge, d.sign);
    w.syllables.push_back(
        {d.edge, d.sign, static_cast<Elt>(rng() % g.vertex_groups[at]->order)});
  }
  return w;
}

int run_census(const std::string& path, const std::string& from_s, const std::string& to_s,
               int stages, long long budget, bool as_json) {
  const SpecFile f = load_spec_file(path);
  const Basepoint from = parse_basepoint(from_s);
  const Basepoint to = parse_basepoint(to_s);
  CensusOptions opt;
  opt.budget = budget;
  opt.store_reps = false;
  const Filtration fl = filtration(f.graph, from, to, stages, opt);

  if (as_json) {
    json j;
    j["command"] = "census";
    j["spec_digest"] = f.digest;
    j["flags"] = {{"from", from_s}, {"to", to_s}, {"stages", stages}, {"budget", budget}};
    j["baseline"] = fl.baseline;
    json rows = json::array();
    for (const StageCensus& s : fl.stages) {
      json row;
      row["stage"] = s.stage;
      row["length"] = stage_label(f.graph, from, to, s.stage);
      row["z"] = s.z_count;
      row["j"] = s.j_count;
      row["new_reduced"] = s.new_reduced;
      row["r"] = s.r_count;
      rows.push_back(std::move(row));
    }
    j["stages"] = std::move(rows);
    emit_json(std::move(j));
    return 0;
  }

  std::ostringstream out;
  out << "# spec " << f.digest << "\n";
  out << "# census from " << basepoint_name(from) << " to " << basepoint_name(to) << " stages "
      << stages << "\n";
  out << "# baseline " << fl.baseline << "\n";
  out << "# lengths";
  for (const StageCensus& s : fl.stages)
    out << " " << stage_label(f.graph, from, to, s.stage);
  out << "\n";
  out << "n z j new_reduced r\n";
  for (const StageCensus& s : fl.stages)
    out << s.stage << " " << s.z_count << " " << s.j_count << " " << s.new_reduced << " "
        << s.r_count << "\n";
  emit(out.str());
  return 0;
}

int run_word_eq(const std::string& path, const std::string& from_s, const std::string& lhs,
                const std::string& rhs, bool as_json) {
  const SpecFile f = load_spec_file(path);
  const Word a = parse_cli_word(f, from_s, lhs);
  const Word b = parse_cli_word(f, from_s, rhs);
  const bool equal = word_equal(a, b);
  const std::string ca = format_word(normalize(a));
  const std::string cb = format_word(normalize(b));

  if (as_json) {
    json j;
    j["command"] = "word-eq";
    j["spec_digest"] = f.digest;
    j["flags"] = {{"from", from_s.empty() ? "v0" : from_s}};
    j["equal"] = equal;
    j["lhs"] = ca;
    j["rhs"] = cb;
    emit_json(std::move(j));
    return 0;
  }
  std::ostringstream out;
  out << (equal ? "true" : "false") << "\n";
  out << "lhs: " << ca << "\n";
  out << "rhs: " << cb << "\n";
  emit(out.str());
  return 0;
}

int run_normal_form(const std::string& path, const std::string& from_s, const std::string& text,
                    bool as_json) {
  const SpecFile f = load_spec_file(path);
  const Word w = parse_cli_word(f, from_s, text);
  const Word nf = normalize(w);
  if (as_json) {
    json j;
    j["command"] = "normal-form";
    j["spec_digest"] = f.digest;
    j["flags"] = {{"from", from_s.empty() ? "v0" : from_s}, {"word", text}};
    j["canonical"] = format_word(nf);
    j["crossings"] = nf.crossings();
    j["start"] = basepoint_name(Basepoint::vertex(nf.start));
    j["end"] = basepoint_name(Basepoint::vertex(end_vertex(nf)));
    emit_json(std::move(j));
    return 0;
  }
  emit(format_word(nf) + "\n");
  return 0;
}

const Multigraph& require_multigraph(const SpecFile& f) {
  if (f.kind != "multigraph" || !f.multigraph)
    fail(errc::spec_mismatch, "this command needs a multigraph spec");
  return *f.multigraph;
}

int run_pi1(const std::string& path, int vertex, bool as_json) {
  const SpecFile f = load_spec_file(path);
  const int rank = pi1_rank(require_multigraph(f), vertex);
  if (as_json) {
    json j;
    j["command"] = "pi1";
    j["spec_digest"] = f.digest;
    j["flags"] = {{"vertex", vertex}};
    j["rank"] = rank;
    emit_json(std::move(j));
    return 0;
  }
  emit(std::to_string(rank) + "\n");
  return 0;
}

int run_is_tree(const std::string& path, bool as_json) {
  const SpecFile f = load_spec_file(path);
  const bool tree = is_tree(require_multigraph(f));
  if (as_json) {
    json j;
    j["command"] = "is-tree";
    j["spec_digest"] = f.digest;
    j["tree"] = tree;
    emit_json(std::move(j));
    return 0;
  }
  emit(std::string(tree ? "true" : "false") + "\n");
  return 0;
}

int run_splitting(const std::string& path, int length, long long budget, bool as_json) {
  const SpecFile f = load_spec_file(path);
  if (f.kind != "wedge" || !f.wedge)
    fail(errc::spec_mismatch, "this command needs a wedge spec");
  const std::vector<long long> counts = splitting_census(*f.wedge, length, budget);
  if (as_json) {
    json j;
    j["command"] = "splitting";
    j["spec_digest"] = f.digest;
    j["flags"] = {{"length", length}, {"budget", budget}};
    j["counts"] = counts;
    j["count"] = counts.back();
    emit_json(std::move(j));
    return 0;
  }
  emit(std::to_string(counts.back()) + "\n");
  return 0;
}

int run_connectivity(int stage, const std::string& k_s, const std::string& l_s,
                     const std::string& m_s, bool as_json) {
  const ConnDegree k = parse_conn(k_s);
  const ConnDegree l = parse_conn(l_s);
  const ConnDegree m = parse_conn(m_s);
  const ConnDegree d = jz_conn(stage, k, l, m);
  if (as_json) {
    json j;
    j["command"] = "connectivity";
    j["flags"] = {{"stage", stage}, {"k", k_s}, {"l", l_s}, {"m", m_s}};
    j["degree"] = to_string(d);
    emit_json(std::move(j));
    return 0;
  }
  emit(to_string(d) + "\n");
  return 0;
}

int run_oracle_check(const std::string& path, int radius, long long budget, bool as_json) {
  const SpecFile f = load_spec_file(path);
  const GraphOfGroups& g = *f.graph;
  std::vector<std::pair<std::string, std::string>> checks;

  // census self-consistency: recount every r from distinct canonical forms
  const std::vector<Basepoint> points = all_basepoints(g);
  for (const Basepoint& a : points) {
    for (const Basepoint& b : points) {
      const StagePattern pat = stage_pattern(f.graph, a, b);
      const int count = stages_up_to(pat, radius);
      const std::string name = "filtration " + basepoint_name(a) + "->" + basepoint_name(b);
      if (count == 0) {
        checks.push_back({name, "unreachable"});
        continue;
      }
      CensusOptions opt;
      opt.budget = budget;
      opt.verify = true;
      opt.store_reps = false;
      try {
        const Filtration fl = filtration(f.graph, a, b, count, opt);
        checks.push_back({name, "r=" + std::to_string(fl.stages.back().r_count)});
      } catch (const error& e) {
        if (e.code() == errc::consistency) fail(errc::oracle_mismatch, e.what());
        throw;
      }
    }
  }

  // concrete model agreement
  if (f.model) {
    verify_faithful(*f.model, radius, budget);
    checks.push_back({"faithful", "radius " + std::to_string(radius)});
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Basepoint at = Basepoint::vertex(v);
      const BallCensus ball = ball_enumerate(*f.model, v, radius, budget);
      const StagePattern pat = stage_pattern(f.graph, at, at);
      CensusOptions opt;
      opt.budget = budget;
      opt.store_reps = false;
      const Filtration fl = filtration(f.graph, at, at, stages_up_to(pat, radius), opt);
      std::vector<long long> expected(static_cast<size_t>(radius) + 1, 0);
      for (const StageCensus& s : fl.stages) expected[s.stage] = s.new_reduced;
      for (int c = 0; c <= radius; ++c)
        if (ball.new_at_base[c] != expected[c])
          fail(errc::oracle_mismatch,
               "ball census at " + basepoint_name(at) + " crossing " + std::to_string(c) +
                   ": model gives " + std::to_string(ball.new_at_base[c]) +
                   " new values but the census gives " + std::to_string(expected[c]));
      checks.push_back({"ball " + basepoint_name(at), "matches census"});
    }
  }

  // wedge: stable splitting layers against the hub census
  if (f.kind == "wedge" && f.wedge) {
    const int max_len = radius / 2;
    const std::vector<long long> counts = splitting_census(*f.wedge, max_len, budget);
    CensusOptions opt;
    opt.budget = budget;
    opt.store_reps = false;
    const Filtration fl =
        filtration(f.graph, Basepoint::vertex(0), Basepoint::vertex(0), max_len + 1, opt);
    for (int n = 0; n <= max_len; ++n)
      if (fl.stages[n].new_reduced != counts[n])
        fail(errc::oracle_mismatch, "splitting layer " + std::to_string(n) + " counts " +
                                        std::to_string(counts[n]) + " but the hub census adds " +
                                        std::to_string(fl.stages[n].new_reduced));
    checks.push_back({"splitting", "layers 0.." + std::to_string(max_len)});
  }

  // multigraph: two independent rank computations
  if (f.kind == "multigraph" && f.multigraph) {
    for (int v = 0; v < f.multigraph->vertex_count; ++v) {
      const int by_euler = pi1_rank(*f.multigraph, v);
      const int by_tree = spanning_tree_pi1(*f.multigraph, v);
      if (by_euler != by_tree)
        fail(errc::oracle_mismatch, "rank at vertex " + std::to_string(v) + ": " +
                                        std::to_string(by_euler) + " by counting, " +
                                        std::to_string(by_tree) + " by spanning tree");
    }
    checks.push_back({"pi1", "both computations agree"});
  }

  // word sample: reduction order independence and inverse law
  {
    std::mt19937_64 rng(12345);
    const int max_cross = radius < 6 ? radius : 6;
    int sampled = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = sample_word(f.graph, rng, max_cross);
      if (!reduction_order_oracle(w, budget))
        fail(errc::oracle_mismatch, "reduction orders disagree on '" + format_word(w) + "'");
      Word trivial;
      trivial.spec = f.graph;
      trivial.start = w.start;
      if (!word_equal(concat(w, inverse(w)), trivial))
        fail(errc::oracle_mismatch, "inverse law fails on '" + format_word(w) + "'");
      ++sampled;
    }
    checks.push_back({"words", std::to_string(sampled) + " samples confluent"});
  }

  if (as_json) {
    json j;
    j["command"] = "oracle-check";
    j["spec_digest"] = f.digest;
    j["flags"] = {{"radius", radius}, {"budget", budget}};
    json list = json::array();
    for (const auto& [name, detail] : checks) {
      json c;
      c["name"] = name;
      c["status"] = "ok";
      c["detail"] = detail;
      list.push_back(std::move(c));
    }
    j["checks"] = std::move(list);
    emit_json(std::move(j));
    return 0;
  }
  std::ostringstream out;
  for (const auto& [name, detail] : checks) out << "ok " << name << ": " << detail << "\n";
  emit(out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path censuses, word problem, and oracles for pushouts of group diagrams"};
  app.require_subcommand(1);

  std::string spec_path, from_s, to_s, word1, word2;
  int stages = 3, vertex = 0, length = 0, stage = 2, radius = 4;
  long long budget = 1'000'000;
  std::string k_s, l_s, m_s;
  bool as_json = false;

  CLI::App* census = app.add_subcommand("census", "Staged census of path classes");
  census->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  census->add_option("--from", from_s)->required();
  census->add_option("--to", to_s)->required();
  census->add_option("--stages", stages)->required()->check(CLI::PositiveNumber);
  census->add_option("--budget", budget);
  census->add_flag("--json", as_json);

  CLI::App* word_eq = app.add_subcommand("word-eq", "Decide equality of two words");
  word_eq->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  word_eq->add_option("word1", word1)->required();
  word_eq->add_option("word2", word2)->required();
  word_eq->add_option("--from", from_s);
  word_eq->add_flag("--json", as_json);

  CLI::App* normal_form = app.add_subcommand("normal-form", "Canonical form of a word");
  normal_form->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  normal_form->add_option("word", word1)->required();
  normal_form->add_option("--from", from_s);
  normal_form->add_flag("--json", as_json);

  CLI::App* pi1 = app.add_subcommand("pi1", "Fundamental group rank of a multigraph");
  pi1->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  pi1->add_option("--vertex", vertex);
  pi1->add_flag("--json", as_json);

  CLI::App* is_tree_cmd = app.add_subcommand("is-tree", "Whether a multigraph is a tree");
  is_tree_cmd->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  is_tree_cmd->add_flag("--json", as_json);

  CLI::App* splitting = app.add_subcommand("splitting", "Stable splitting layer sizes");
  splitting->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  splitting->add_option("--length", length)->required()->check(CLI::NonNegativeNumber);
  splitting->add_option("--budget", budget);
  splitting->add_flag("--json", as_json);

  CLI::App* connectivity = app.add_subcommand("connectivity", "Stage inclusion connectivity");
  connectivity->add_option("--stage", stage)->required();
  connectivity->add_option("--k", k_s)->required();
  connectivity->add_option("--l", l_s)->required();
  connectivity->add_option("--m", m_s)->required();
  connectivity->add_flag("--json", as_json);

  CLI::App* oracle = app.add_subcommand("oracle-check", "Full agreement suite for a spec");
  oracle->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  oracle->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  oracle->add_option("--budget", budget);
  oracle->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census->parsed()) return run_census(spec_path, from_s, to_s, stages, budget, as_json);
    if (word_eq->parsed()) return run_word_eq(spec_path, from_s, word1, word2, as_json);
    if (normal_form->parsed()) return run_normal_form(spec_path, from_s, word1, as_json);
    if (pi1->parsed()) return run_pi1(spec_path, vertex, as_json);
    if (is_tree_cmd->parsed()) return run_is_tree(spec_path, as_json);
    if (splitting->parsed()) return run_splitting(spec_path, length, budget, as_json);
    if (connectivity->parsed()) return run_connectivity(stage, k_s, l_s, m_s, as_json);
    if (oracle->parsed()) return run_oracle_check(spec_path, radius, budget, as_json);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case errc::budget_exceeded:
        return 3;
      case errc::oracle_mismatch:
        return 4;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
