#pragma once

#include <stdexcept>
#include <string>

namespace gog {

enum class errc {
  bad_shape,
  not_associative,
  no_identity,
  no_inverse,
  not_homomorphism,
  not_injective,
  not_a_subgroup,
  dangling_edge,
  bad_hom_target,
  bad_word,
  endpoint_mismatch,
  not_a_pinch,
  not_an_amalgam,
  bad_letter,
  broken_chain,
  budget_exceeded,
  bad_stage,
  spec_mismatch,
  oracle_mismatch,
  parse_error,
  overflow,
  consistency,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace gog
