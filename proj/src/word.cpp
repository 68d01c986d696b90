#include "gog/word.hpp"

#include <sstream>
#include <string>

namespace gog {

VertexId end_vertex(const Word& w) {
  VertexId v = w.start;
  for (const auto& s : w.syllables) v = w.spec->arrive_vertex(s.edge, s.sign);
  return v;
}

void validate_word(const Word& w) {
  if (!w.spec) fail(errc::bad_word, "word has no spec");
  const GraphOfGroups& g = *w.spec;
  if (w.start < 0 || w.start >= g.vertex_count()) fail(errc::bad_word, "start vertex out of range");
  if (w.head < 0 || w.head >= g.vertex_groups[w.start]->order)
    fail(errc::bad_word, "head element out of range");
  VertexId v = w.start;
  for (size_t i = 0; i < w.syllables.size(); ++i) {
    const Syllable& s = w.syllables[i];
    const std::string where = "syllable " + std::to_string(i);
    if (s.edge < 0 || s.edge >= g.edge_count()) fail(errc::bad_word, where + ": edge out of range");
    if (s.sign != 1 && s.sign != -1) fail(errc::bad_word, where + ": sign must be +1 or -1");
    if (g.depart_vertex(s.edge, s.sign) != v)
      fail(errc::bad_word, where + ": crossing does not depart from the current vertex");
    v = g.arrive_vertex(s.edge, s.sign);
    if (s.elt < 0 || s.elt >= g.vertex_groups[v]->order)
      fail(errc::bad_word, where + ": element out of range for the arrival group");
  }
}

Word parse_word(const SpecPtr& spec, VertexId start, const std::string& text) {
  Word w;
  w.spec = spec;
  w.start = start;
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok)) fail(errc::parse_error, "empty word");
  try {
    size_t used = 0;
    w.head = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    fail(errc::parse_error, "expected leading group element, got '" + tok + "'");
  }
  while (in >> tok) {
    if (tok.size() < 3 || tok[0] != 't')
      fail(errc::parse_error, "expected crossing like t0+ or t2-, got '" + tok + "'");
    const char sign_char = tok.back();
    if (sign_char != '+' && sign_char != '-')
      fail(errc::parse_error, "crossing must end in + or -, got '" + tok + "'");
    Syllable s;
    try {
      size_t used = 0;
      s.edge = std::stoi(tok.substr(1, tok.size() - 2), &used);
      if (used != tok.size() - 2) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad edge index in '" + tok + "'");
    }
    s.sign = sign_char == '+' ? 1 : -1;
    if (!(in >> tok)) fail(errc::parse_error, "crossing must be followed by a group element");
    try {
      size_t used = 0;
      s.elt = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(errc::parse_error, "expected group element, got '" + tok + "'");
    }
    w.syllables.push_back(s);
  }
  try {
    validate_word(w);
  } catch (const error& e) {
    fail(errc::parse_error, e.what());
  }
  return w;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  out << w.head;
  for (const auto& s : w.syllables)
    out << " t" << s.edge << (s.sign > 0 ? '+' : '-') << ' ' << s.elt;
  return out.str();
}

Word inverse(const Word& w) {
  const GraphOfGroups& g = *w.spec;
  Word out;
  out.spec = w.spec;
  out.start = end_vertex(w);
  Elt last = w.syllables.empty() ? w.head : w.syllables.back().elt;
  out.head = g.vertex_groups[out.start]->inverse(last);
  for (size_t i = w.syllables.size(); i-- > 0;) {
    const Syllable& s = w.syllables[i];
    Elt prev = i == 0 ? w.head : w.syllables[i - 1].elt;
    VertexId pv = i == 0 ? w.start : g.arrive_vertex(w.syllables[i - 1].edge, w.syllables[i - 1].sign);
    out.syllables.push_back({s.edge, -s.sign, g.vertex_groups[pv]->inverse(prev)});
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  if (a.spec != b.spec) fail(errc::spec_mismatch, "words over different specs");
  VertexId junction = end_vertex(a);
  if (junction != b.start) fail(errc::endpoint_mismatch, "words do not compose");
  Word out = a;
  const FiniteGroup& jg = *a.spec->vertex_groups[junction];
  if (out.syllables.empty())
    out.head = jg.times(out.head, b.head);
  else
    out.syllables.back().elt = jg.times(out.syllables.back().elt, b.head);
  for (const auto& s : b.syllables) out.syllables.push_back(s);
  return out;
}

bool words_identical(const Word& a, const Word& b) {
  return a.spec == b.spec && a.start == b.start && a.head == b.head && a.syllables == b.syllables;
}

std::string word_key(const Word& w) {
  std::ostringstream out;
  out << w.start << ':' << w.head;
  for (const auto& s : w.syllables)
    out << '|' << s.edge << (s.sign > 0 ? '+' : '-') << s.elt;
  return out.str();
}

}  // namespace gog
