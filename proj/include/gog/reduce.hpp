#pragma once

#include <optional>
#include <vector>

#include "gog/word.hpp"

namespace gog {

// A pinch is a consecutive pair of syllables crossing the same edge with
// opposite signs whose middle element lies in the appropriate edge subgroup
// image. transfer is the edge-group witness carried across when reducing.
struct Pinch {
  int position = 0;  // index of the first syllable of the pair
  Elt transfer = 0;  // edge group element
};

std::vector<Pinch> find_pinches(const Word& w);

// Removes syllables at position, position + 1, folding the carried element
// into the preceding slot. Throws not_a_pinch if the pair is not a pinch.
Word reduce_once(const Word& w, const Pinch& p);

// Right-to-left coset sliding. The result spells the same group element,
// has the same crossing sequence, and every syllable element is a coset
// representative for its crossing's exit subgroup.
Word slide_canonicalize(const Word& w);

bool is_slide_canonical(const Word& w);
bool is_reduced(const Word& w);

// Slide, then repeatedly remove the leftmost pinch and re-slide.
// The result is the canonical normal form of the word's group element.
Word normalize(const Word& w);

// Same start and end vertex required; throws endpoint_mismatch otherwise.
bool word_equal(const Word& a, const Word& b);

// Independent recursion: equal when both are pinch-free and slide-equal, or
// when reducing each leftmost pinch yields equal words.
bool word_equal_recursive(const Word& a, const Word& b);

}  // namespace gog
