#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gog/census.hpp"
#include "gog/shipped.hpp"

using namespace gog;

namespace {

struct BenchCase {
  const char* name;
  SpecPtr spec;
  Basepoint from;
  Basepoint to;
  int stage;
};

double run_ms(const BenchCase& c, bool parallel, long long* z_out, long long* j_out) {
  CensusOptions opt;
  opt.budget = 100'000'000;
  opt.parallel = parallel;
  opt.store_reps = false;
  const auto t0 = std::chrono::steady_clock::now();
  const EnumerateResult r = parallel ? enumerate_stage(c.spec, c.from, c.to, c.stage, opt)
                                     : enumerate_stage_serial(c.spec, c.from, c.to, c.stage, opt);
  const auto t1 = std::chrono::steady_clock::now();
  *z_out = r.z_count;
  *j_out = r.j_count;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  const std::vector<BenchCase> cases = {
      {"circle v0->v0", shipped("circle").file.graph, Basepoint::vertex(0),
       Basepoint::vertex(0), 18},
      {"psl2z hub", shipped("psl2z_wedge").file.graph, Basepoint::vertex(0),
       Basepoint::vertex(0), 16},
      {"sl2z v0->v0", shipped("sl2z_amalgam").file.graph, Basepoint::vertex(0),
       Basepoint::vertex(0), 12},
      {"z3 hnn e0->e0", shipped("z3_hnn").file.graph, Basepoint::edge(0), Basepoint::edge(0),
       14},
  };

  std::printf("%-16s %5s %9s %9s %11s %13s %8s\n", "case", "stage", "z", "j", "serial_ms",
              "parallel_ms", "speedup");
  bool all_match = true;
  for (const BenchCase& c : cases) {
    long long zs = 0, js = 0, zp = 0, jp = 0;
    const double serial = run_ms(c, false, &zs, &js);
    const double parallel = run_ms(c, true, &zp, &jp);
    if (zs != zp || js != jp) all_match = false;
    std::printf("%-16s %5d %9lld %9lld %11.1f %13.1f %7.2fx\n", c.name, c.stage, zp, jp, serial,
                parallel, serial / parallel);
  }

  // elementwise identity on a stored run
  {
    const SpecPtr spec = shipped("sl2z_amalgam").file.graph;
    CensusOptions opt;
    opt.budget = 100'000'000;
    const EnumerateResult a =
        enumerate_stage(spec, Basepoint::vertex(0), Basepoint::vertex(0), 8, opt);
    opt.parallel = false;
    const EnumerateResult b =
        enumerate_stage_serial(spec, Basepoint::vertex(0), Basepoint::vertex(0), 8, opt);
    bool same = a.z_classes.size() == b.z_classes.size();
    for (size_t i = 0; same && i < a.z_classes.size(); ++i)
      same = format_fibre(a.z_classes[i]) == format_fibre(b.z_classes[i]) && a.in_j[i] == b.in_j[i];
    std::printf("stored classes identical and in order: %s\n", same ? "yes" : "NO");
    all_match = all_match && same;
  }

  std::printf("counts agree on all cases: %s\n", all_match ? "yes" : "NO");
  return all_match ? 0 : 1;
}
