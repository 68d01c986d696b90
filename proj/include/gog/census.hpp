#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gog/reduce.hpp"

namespace gog {

// Path word with decorated endpoints for edge basepoints. A path based at an
// edge leaves it through one half: 0 for the source half, 1 for the target
// half. start_edge / start_half record that exit (-1 when the basepoint is a
// vertex), and end_edge / end_half the entry at the far end. When set,
// core.start is the vertex carrying the recorded half.
struct FibreWord {
  Word core;
  EdgeId start_edge = -1;
  int start_half = -1;
  EdgeId end_edge = -1;
  int end_half = -1;
};

// Degenerate class living inside a single edge: both endpoints on the same
// edge and the whole path inside its edge group.
struct InsideEdge {
  EdgeId edge = 0;
  Elt elt = 0;
};

using FibreClass = std::variant<FibreWord, InsideEdge>;

struct StageCensus {
  int stage = 0;           // crossing count
  long long z_count = 0;   // canonical classes at this stage
  long long j_count = 0;   // classes that merge under one reduction
  long long new_reduced = 0;  // z_count - j_count
  long long r_count = 0;   // distinct elements reached by this stage
};

struct CensusOptions {
  long long budget = 1'000'000;
  bool parallel = true;
  bool store_reps = true;
  bool verify = false;
};

struct EnumerateResult {
  long long z_count = 0;
  long long j_count = 0;
  std::vector<FibreWord> z_classes;  // empty unless options.store_reps
  std::vector<char> in_j;            // parallel to z_classes
};

// All canonical classes from one basepoint to another with exactly `stage`
// crossings, in deterministic order. Throws budget_exceeded when the class
// count would pass options.budget, bad_stage on unusable stages.
EnumerateResult enumerate_stage(const SpecPtr& spec, const Basepoint& from, const Basepoint& to,
                                int stage, const CensusOptions& options = {});
// Reference implementation; identical output, no parallelism.
EnumerateResult enumerate_stage_serial(const SpecPtr& spec, const Basepoint& from,
                                       const Basepoint& to, int stage,
                                       const CensusOptions& options = {});

struct Filtration {
  SpecPtr spec;
  Basepoint from;
  Basepoint to;
  long long baseline = 0;  // elements present before any crossing is allowed
  std::vector<StageCensus> stages;
  // Per stage, the pinch-free classes: the elements newly added at that stage.
  std::vector<std::vector<FibreWord>> representatives;
};

// Stages run over the crossing counts usable for this basepoint pair, in
// increasing order, up to stage_count entries. verify recomputes every
// r_count from distinct normal forms instead of trusting the recurrence.
Filtration filtration(const SpecPtr& spec, const Basepoint& from, const Basepoint& to,
                      int stage_count, const CensusOptions& options = {});

// Canonical key for the group element a fibre word spells; two fibre words
// between the same basepoints get equal keys exactly when they are equal in
// the colimit group.
FibreClass normalize_fibre(const FibreWord& w);
std::string fibre_key(const FibreClass& c);
std::string format_fibre(const FibreWord& w);

// Reduction structure on fibre words: boundary pinches at the basepoints plus
// interior pinches. Used to decide membership in J.
bool has_any_pinch(const FibreWord& w);

// Usable crossing counts for a basepoint pair. first_stage is the smallest
// crossing count with any class; step is 1 when both parities occur (the
// underlying graph has an odd walk between the basepoints) and 2 otherwise.
// Stages outside the pattern simply enumerate zero classes.
struct StagePattern {
  int first_stage = 0;
  int step = 2;
};
StagePattern stage_pattern(const SpecPtr& spec, const Basepoint& from, const Basepoint& to);

// Reported path length for specs whose groups are all trivial (multigraphs):
// vertex-vertex stages report n crossings as length n, mixed as n + 1,
// edge-edge as n + 2. With nontrivial groups lengths double.
long long stage_label(const SpecPtr& spec, const Basepoint& from, const Basepoint& to, int stage);

// Exhaustive identification check on a two-vertex amalgam: a left element g
// and a right element h name the same colimit element (after conjugating the
// right side over) exactly when both are images of one edge group element.
struct GapMapReport {
  bool pass = false;
  std::vector<std::pair<Elt, Elt>> identified;  // (left, right) pairs found equal
  std::string detail;                           // counterexample description on failure
};
GapMapReport gap_map_check(const SpecPtr& spec);

}  // namespace gog
