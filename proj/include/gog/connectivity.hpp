#pragma once

#include <string>

#include "gog/errors.hpp"

namespace gog {

// Connectivity degree: either a finite integer or infinity. Arithmetic floors
// at -2, and a zero coefficient absorbs infinity in scaled sums.
struct ConnDegree {
  bool infinite = false;
  long long value = 0;

  static ConnDegree inf() { return {true, 0}; }
  static ConnDegree of(long long v) { return {false, v < -2 ? -2 : v}; }

  bool operator==(const ConnDegree& o) const {
    if (infinite != o.infinite) return false;
    return infinite || value == o.value;
  }
};

std::string to_string(const ConnDegree& d);
ConnDegree parse_conn(const std::string& text);

// Join of spaces with the given degrees.
ConnDegree join_conn(const ConnDegree& a, const ConnDegree& b);

// Diagonal-induced bound: f - 1, floored.
ConnDegree diagonal_conn(const ConnDegree& f);

// Connectivity of the stage inclusion map, where k bounds the source
// basepoint side, l the target side, and m the ambient total space.
// Stage 2j gives m + j*(l+2) + (j-1)*(k+2); stage 2j+1 gives
// m + j*(k+l+4). Stages below 2 throw bad_stage; results floor at -2,
// and a zero coefficient absorbs an infinite operand.
ConnDegree jz_conn(int stage, const ConnDegree& k, const ConnDegree& l, const ConnDegree& m);

// Connectivity of the whole tail past a stage: the next stage's degree, by
// monotonicity in the stage.
ConnDegree tail_conn(int from_stage, const ConnDegree& k, const ConnDegree& l,
                     const ConnDegree& m);

}  // namespace gog
