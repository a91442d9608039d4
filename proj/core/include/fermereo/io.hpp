#pragma once

#include <optional>
#include <string>

#include "fermereo/axioms.hpp"

namespace fermereo {

// JSON interchange. Files carry 1-based mode indices (e1 ... ed); the
// in-memory types are 0-based. All serializers emit sorted keys and fixed
// indentation, so equal values produce byte-identical text. Parsers throw
// std::invalid_argument on malformed or inconsistent input.

// {"dim": d, "degree": r, "coeffs": [{"indices": [1, 2], "re": x, "im": y}, ...]}
std::string tensor_to_json(const AntiSymTensor& a, int indent = 2);
AntiSymTensor tensor_from_json(const std::string& text);

// {"dim": d, "vectors": [[{"re": x, "im": y}, ...], ...]}
std::string vectors_to_json(const std::vector<Eigen::VectorXcd>& vectors, int indent = 2);
std::vector<Eigen::VectorXcd> vectors_from_json(const std::string& text);

// Subspaces serialize as the vector list of their generators plus rank.
std::string subspace_to_json(const Subspace& s, int indent = 2);
Subspace subspace_from_json(const std::string& text, double eps = kDefaultEps);

std::string report_to_json(const AxiomReport& report, int indent = 2);

// Either a state document (coeffs) or a vector list (vectors).
struct ParsedInput {
  std::optional<AntiSymTensor> state;
  std::optional<std::vector<Eigen::VectorXcd>> vectors;
};
ParsedInput parse_input(const std::string& text);

}  // namespace fermereo
