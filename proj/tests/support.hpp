#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gog/graph.hpp"
#include "gog/word.hpp"

namespace testsupport {

using namespace gog;

inline GroupPtr make_s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < 6; ++i) index[perms[i]] = i;
  std::vector<std::vector<Elt>> mul(6, std::vector<Elt>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> comp(3);
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      mul[a][b] = index[comp];
    }
  return validate_group(mul);
}

inline GroupPtr klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

inline std::vector<Elt> elements_of_order(const FiniteGroup& g, int n) {
  std::vector<Elt> out;
  for (Elt a = 0; a < g.order; ++a)
    if (element_order(g, a) == n) out.push_back(a);
  return out;
}

// Random graph of groups with injective edge embeddings.
inline SpecPtr random_spec(std::mt19937_64& rng) {
  static const std::vector<GroupPtr> pool = {trivial_group(),  cyclic_group(2), cyclic_group(3),
                                             cyclic_group(4),  make_s3(),
                                             klein_four()};
  std::uniform_int_distribution<int> nv_pick(1, 3);
  const int nv = nv_pick(rng);
  std::vector<GroupPtr> vgs;
  for (int v = 0; v < nv; ++v) vgs.push_back(pool[rng() % pool.size()]);
  std::uniform_int_distribution<int> ne_pick(1, 3);
  const int ne = ne_pick(rng);
  std::vector<EdgeInput> edges;
  for (int e = 0; e < ne; ++e) {
    const int src = static_cast<int>(rng() % nv);
    const int tgt = static_cast<int>(rng() % nv);
    GroupPtr h = trivial_group();
    GroupHom alpha = validate_hom(h, vgs[src], {0});
    GroupHom beta = validate_hom(h, vgs[tgt], {0});
    for (const int ord : {3, 2}) {
      const auto in_src = elements_of_order(*vgs[src], ord);
      const auto in_tgt = elements_of_order(*vgs[tgt], ord);
      if (in_src.empty() || in_tgt.empty()) continue;
      if (rng() % 2 == 0) continue;
      h = cyclic_group(ord);
      alpha = cyclic_hom(h, vgs[src], in_src[rng() % in_src.size()], true);
      beta = cyclic_hom(h, vgs[tgt], in_tgt[rng() % in_tgt.size()], true);
      break;
    }
    edges.push_back({src, tgt, h, alpha, beta});
  }
  return make_graph_of_groups(std::move(vgs), std::move(edges));
}

// Random two-vertex amalgam with injective legs.
inline SpecPtr random_amalgam(std::mt19937_64& rng) {
  static const std::vector<GroupPtr> pool = {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                             cyclic_group(6), make_s3(),       klein_four()};
  while (true) {
    const GroupPtr left = pool[rng() % pool.size()];
    const GroupPtr right = pool[rng() % pool.size()];
    std::vector<int> orders = {1, 2, 3};
    const int ord = orders[rng() % orders.size()];
    if (ord == 1) {
      const GroupPtr h = trivial_group();
      return amalgam(left, right, h, validate_hom(h, left, {0}, true),
                     validate_hom(h, right, {0}, true));
    }
    const auto in_left = elements_of_order(*left, ord);
    const auto in_right = elements_of_order(*right, ord);
    if (in_left.empty() || in_right.empty()) continue;
    const GroupPtr h = cyclic_group(ord);
    return amalgam(left, right, h,
                   cyclic_hom(h, left, in_left[rng() % in_left.size()], true),
                   cyclic_hom(h, right, in_right[rng() % in_right.size()], true));
  }
}

inline Word random_word(const SpecPtr& spec, std::mt19937_64& rng, int max_cross) {
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
    w.syllables.push_back({d.edge, d.sign, static_cast<Elt>(rng() % g.vertex_groups[at]->order)});
  }
  return w;
}

inline std::string spec_path(const std::string& file) {
  return std::string(GOG_SPEC_DIR) + "/" + file;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string sh_quote(const std::string& s) {
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout (and stderr
// when merged) plus the exit code.
inline CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr = true) {
  std::string cmd = sh_quote(GOG_CLI_PATH);
  for (const auto& a : args) cmd += " " + sh_quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace testsupport
