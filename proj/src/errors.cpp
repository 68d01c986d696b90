#include "gog/errors.hpp"

namespace gog {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_shape: return "BadShape";
    case errc::not_associative: return "NotAssociative";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::not_injective: return "NotInjective";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::dangling_edge: return "DanglingEdge";
    case errc::bad_hom_target: return "BadHomTarget";
    case errc::bad_word: return "BadWord";
    case errc::endpoint_mismatch: return "EndpointMismatch";
    case errc::not_a_pinch: return "NotAPinch";
    case errc::not_an_amalgam: return "NotAnAmalgam";
    case errc::bad_letter: return "BadLetter";
    case errc::broken_chain: return "BrokenChain";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::bad_stage: return "BadStage";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::oracle_mismatch: return "OracleMismatch";
    case errc::parse_error: return "ParseError";
    case errc::overflow: return "Overflow";
    case errc::consistency: return "ConsistencyCheckFailed";
  }
  return "UnknownError";
}

void fail(errc code, const std::string& message) { throw error(code, message); }

}  // namespace gog
