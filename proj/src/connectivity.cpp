#include "gog/connectivity.hpp"

#include <cstddef>
#include <stdexcept>

namespace gog {

std::string to_string(const ConnDegree& d) {
  if (d.infinite) return "inf";
  return std::to_string(d.value);
}

ConnDegree parse_conn(const std::string& text) {
  if (text == "inf") return ConnDegree::inf();
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) fail(errc::parse_error, "trailing characters in degree '" + text + "'");
    return ConnDegree::of(v);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse_error, "expected an integer or 'inf', got '" + text + "'");
  }
}

ConnDegree join_conn(const ConnDegree& a, const ConnDegree& b) {
  if (a.infinite || b.infinite) return ConnDegree::inf();
  return ConnDegree::of(a.value + b.value + 2);
}

ConnDegree diagonal_conn(const ConnDegree& f) {
  if (f.infinite) return ConnDegree::inf();
  return ConnDegree::of(f.value - 1);
}

ConnDegree jz_conn(int stage, const ConnDegree& k, const ConnDegree& l, const ConnDegree& m) {
  if (stage < 2) fail(errc::bad_stage, "stage inclusions start at stage 2");
  const long long j = stage / 2;
  const long long coeff_l = j;
  const long long coeff_k = (stage % 2 == 0) ? j - 1 : j;
  if (m.infinite) return ConnDegree::inf();
  if (l.infinite && coeff_l != 0) return ConnDegree::inf();
  if (k.infinite && coeff_k != 0) return ConnDegree::inf();
  long long total = m.value;
  if (coeff_l != 0) total += coeff_l * (l.value + 2);
  if (coeff_k != 0) total += coeff_k * (k.value + 2);
  return ConnDegree::of(total);
}

ConnDegree tail_conn(int from_stage, const ConnDegree& k, const ConnDegree& l,
                     const ConnDegree& m) {
  // The tail past a stage factors through the same-parity chain, and the
  // inclusion degrees are nondecreasing along it, so the first one wins.
  if (from_stage < 1) fail(errc::bad_stage, "tail starts after stage 1");
  return jz_conn(from_stage + 2, k, l, m);
}

}  // namespace gog
