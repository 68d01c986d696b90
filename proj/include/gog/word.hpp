#pragma once

#include <string>
#include <vector>

#include "gog/graph.hpp"

namespace gog {

// One edge crossing followed by the vertex element absorbed after arriving.
struct Syllable {
  EdgeId edge = 0;
  int sign = 0;
  Elt elt = 0;

  bool operator==(const Syllable& o) const {
    return edge == o.edge && sign == o.sign && elt == o.elt;
  }
};

// Path word: head element at the start vertex, then alternating crossings and
// vertex elements. The word reads left to right; syllable i's crossing departs
// from the vertex reached after syllable i - 1.
struct Word {
  SpecPtr spec;
  VertexId start = 0;
  Elt head = 0;
  std::vector<Syllable> syllables;

  int crossings() const { return static_cast<int>(syllables.size()); }
};

// Vertex the word ends at; walks the syllables.
VertexId end_vertex(const Word& w);

// Structural checks: start in range, each crossing departs from the current
// vertex, elements in range. Throws bad_word / endpoint_mismatch.
void validate_word(const Word& w);

// Grammar: g0 [ t<edge><+|-> g ]*, whitespace separated.
Word parse_word(const SpecPtr& spec, VertexId start, const std::string& text);
std::string format_word(const Word& w);

Word inverse(const Word& w);
// Requires end_vertex(a) == b.start.
Word concat(const Word& a, const Word& b);

bool words_identical(const Word& a, const Word& b);
std::string word_key(const Word& w);

}  // namespace gog
