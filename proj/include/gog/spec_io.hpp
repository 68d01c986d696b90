#pragma once

#include <optional>
#include <string>

#include "gog/oracle.hpp"

namespace gog {

// Parsed spec file. kind mirrors the input JSON; the graph is always
// populated (wedges and multigraphs are converted), and the original
// structure is kept when it carries extra meaning.
struct SpecFile {
  int schema = 1;
  std::string kind;
  SpecPtr graph;
  std::optional<WedgeSpec> wedge;
  std::optional<Multigraph> multigraph;
  std::optional<ConcreteModel> model;
  std::string digest;
};

SpecFile parse_spec_json(const std::string& text);
SpecFile load_spec_file(const std::string& path);

// Canonical serialization; parse(serialize(f)) == f byte for byte.
std::string serialize_spec(const SpecFile& f);

std::string fnv1a_hex(const std::string& data);

}  // namespace gog
