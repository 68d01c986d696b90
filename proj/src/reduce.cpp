#include "gog/reduce.hpp"

#include <string>

namespace gog {

namespace {

// A pinch pattern around syllable p reads t^s g t^-s. With s = +1 the middle
// element g sits in the source vertex group and the pair collapses through
// alpha; with s = -1 it sits in the target group and collapses through beta.
bool pinch_at(const Word& w, int p, Elt* transfer) {
  const Syllable& s1 = w.syllables[p];
  const Syllable& s2 = w.syllables[p + 1];
  if (s1.edge != s2.edge || s1.sign != -s2.sign) return false;
  const Edge& e = w.spec->edges[s1.edge];
  Elt pre = s1.sign > 0 ? e.alpha_pre[s1.elt] : e.beta_pre[s1.elt];
  if (pre < 0) return false;
  if (transfer) *transfer = pre;
  return true;
}

}  // namespace

std::vector<Pinch> find_pinches(const Word& w) {
  std::vector<Pinch> out;
  for (int p = 0; p + 1 < w.crossings(); ++p) {
    Elt h = 0;
    if (pinch_at(w, p, &h)) out.push_back({p, h});
  }
  return out;
}

Word reduce_once(const Word& w, const Pinch& p) {
  if (p.position < 0 || p.position + 1 >= w.crossings())
    fail(errc::not_a_pinch, "position out of range");
  Elt h = 0;
  if (!pinch_at(w, p.position, &h) || h != p.transfer)
    fail(errc::not_a_pinch, "syllables do not pinch at position " + std::to_string(p.position));

  const Syllable& s1 = w.syllables[p.position];
  const Syllable& s2 = w.syllables[p.position + 1];
  const Edge& e = w.spec->edges[s1.edge];
  // t alpha(h) t^-1 = beta(h): the +1 pattern leaves beta(h) behind, and
  // symmetrically the -1 pattern leaves alpha(h).
  Elt carry = s1.sign > 0 ? e.beta.apply(h) : e.alpha.apply(h);
  VertexId slot_vertex = w.spec->depart_vertex(s1.edge, s1.sign);
  const FiniteGroup& g = *w.spec->vertex_groups[slot_vertex];
  Elt merged = g.times(carry, s2.elt);

  Word out;
  out.spec = w.spec;
  out.start = w.start;
  out.head = w.head;
  out.syllables.reserve(w.syllables.size() - 2);
  for (int i = 0; i < w.crossings(); ++i)
    if (i != p.position && i != p.position + 1) out.syllables.push_back(w.syllables[i]);
  if (p.position == 0)
    out.head = g.times(out.head, merged);
  else
    out.syllables[p.position - 1].elt = g.times(out.syllables[p.position - 1].elt, merged);
  return out;
}

Word slide_canonicalize(const Word& w) {
  Word out = w;
  // Right to left: each slot receives its transfer before it is decomposed.
  for (int i = out.crossings() - 1; i >= 0; --i) {
    Syllable& s = out.syllables[i];
    const Edge& e = out.spec->edges[s.edge];
    Elt transfer;
    if (s.sign > 0) {
      const CosetTransversal& tr = e.alpha_cosets;
      Elt q = e.alpha_pre[tr.sub_part_of(s.elt)];
      transfer = e.beta.apply(q);
      s.elt = tr.rep_of(s.elt);
    } else {
      const CosetTransversal& tr = e.beta_cosets;
      Elt q = e.beta_pre[tr.sub_part_of(s.elt)];
      transfer = e.alpha.apply(q);
      s.elt = tr.rep_of(s.elt);
    }
    VertexId slot_vertex = out.spec->depart_vertex(s.edge, s.sign);
    const FiniteGroup& g = *out.spec->vertex_groups[slot_vertex];
    if (i == 0)
      out.head = g.times(out.head, transfer);
    else
      out.syllables[i - 1].elt = g.times(out.syllables[i - 1].elt, transfer);
  }
  return out;
}

bool is_slide_canonical(const Word& w) {
  for (const auto& s : w.syllables) {
    const Edge& e = w.spec->edges[s.edge];
    const CosetTransversal& tr = s.sign > 0 ? e.alpha_cosets : e.beta_cosets;
    if (tr.rep_of(s.elt) != s.elt) return false;
  }
  return true;
}

bool is_reduced(const Word& w) {
  for (int p = 0; p + 1 < w.crossings(); ++p)
    if (pinch_at(w, p, nullptr)) return false;
  return true;
}

Word normalize(const Word& w) {
  Word out = slide_canonicalize(w);
  for (;;) {
    auto pinches = find_pinches(out);
    if (pinches.empty()) return out;
    out = slide_canonicalize(reduce_once(out, pinches.front()));
  }
}

static void check_comparable(const Word& a, const Word& b) {
  if (a.spec != b.spec) fail(errc::spec_mismatch, "words over different specs");
  if (a.start != b.start || end_vertex(a) != end_vertex(b))
    fail(errc::endpoint_mismatch, "words do not share endpoints");
}

bool word_equal(const Word& a, const Word& b) {
  check_comparable(a, b);
  return words_identical(normalize(a), normalize(b));
}

bool word_equal_recursive(const Word& a, const Word& b) {
  check_comparable(a, b);
  auto pa = find_pinches(a);
  if (!pa.empty()) return word_equal_recursive(reduce_once(a, pa.front()), b);
  auto pb = find_pinches(b);
  if (!pb.empty()) return word_equal_recursive(a, reduce_once(b, pb.front()));
  // Both reduced: equal exactly when they agree as stage classes.
  if (a.crossings() != b.crossings()) return false;
  return words_identical(slide_canonicalize(a), slide_canonicalize(b));
}

}  // namespace gog
