#include "fermereo/io.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace fermereo {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("invalid JSON");
  return doc;
}

int require_int(const json& doc, const char* key, int lo, int hi) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  }
  const long long v = doc[key].get<long long>();
  if (v < lo || v > hi) {
    throw std::invalid_argument(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(v);
}

double require_double(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw std::invalid_argument(std::string("missing numeric field '") + key + "'");
  }
  const double v = doc[key].get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite number");
  return v;
}

json complex_to_json(Complex c) { return json{{"im", c.imag()}, {"re", c.real()}}; }

Complex complex_from_json(const json& doc) {
  return Complex{require_double(doc, "re"), require_double(doc, "im")};
}

json vector_to_json(const Eigen::VectorXcd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

Eigen::VectorXcd vector_from_json(const json& arr, int dim) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
    throw std::invalid_argument("vector entry has wrong length");
  }
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_from_json(arr[static_cast<std::size_t>(i)]);
  return v;
}

json tensor_doc(const AntiSymTensor& a) {
  json coeffs = json::array();
  for (const auto& [mask, c] : a.coeffs()) {
    json indices = json::array();
    for (const int i : mask_indices(mask)) indices.push_back(i + 1);
    coeffs.push_back(json{{"im", c.imag()}, {"indices", indices}, {"re", c.real()}});
  }
  return json{{"coeffs", coeffs}, {"degree", a.degree()}, {"dim", a.dim()}};
}

AntiSymTensor tensor_from_doc(const json& doc) {
  const int dim = require_int(doc, "dim", 1, kMaxModes);
  const int degree = require_int(doc, "degree", 0, dim);
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw std::invalid_argument("missing 'coeffs' array");
  }
  AntiSymTensor out(dim, degree);
  for (const json& entry : doc["coeffs"]) {
    if (!entry.contains("indices") || !entry["indices"].is_array()) {
      throw std::invalid_argument("coefficient entry lacks 'indices'");
    }
    std::vector<int> indices;
    int prev = 0;
    for (const json& idx : entry["indices"]) {
      if (!idx.is_number_integer()) throw std::invalid_argument("index must be an integer");
      const int one_based = idx.get<int>();
      if (one_based < 1 || one_based > dim) {
        throw std::invalid_argument("index out of range (indices are 1-based)");
      }
      if (one_based <= prev) {
        throw std::invalid_argument("indices must strictly ascend");
      }
      prev = one_based;
      indices.push_back(one_based - 1);
    }
    if (static_cast<int>(indices.size()) != degree) {
      throw std::invalid_argument("index tuple length differs from degree");
    }
    const Complex value = complex_from_json(entry);
    out.add_coeff(mask_from_indices(indices, dim), value);
  }
  return out;
}

std::vector<Eigen::VectorXcd> vectors_from_doc(const json& doc) {
  const int dim = require_int(doc, "dim", 1, kMaxModes);
  if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty()) {
    throw std::invalid_argument("missing nonempty 'vectors' array");
  }
  std::vector<Eigen::VectorXcd> out;
  for (const json& entry : doc["vectors"]) out.push_back(vector_from_json(entry, dim));
  return out;
}

}  // namespace

std::string tensor_to_json(const AntiSymTensor& a, int indent) {
  return tensor_doc(a).dump(indent);
}

AntiSymTensor tensor_from_json(const std::string& text) {
  return tensor_from_doc(parse_text(text));
}

std::string vectors_to_json(const std::vector<Eigen::VectorXcd>& vectors, int indent) {
  if (vectors.empty()) throw std::invalid_argument("vectors_to_json: empty list");
  json arr = json::array();
  for (const Eigen::VectorXcd& v : vectors) arr.push_back(vector_to_json(v));
  return json{{"dim", vectors.front().size()}, {"vectors", arr}}.dump(indent);
}

std::vector<Eigen::VectorXcd> vectors_from_json(const std::string& text) {
  return vectors_from_doc(parse_text(text));
}

std::string subspace_to_json(const Subspace& s, int indent) {
  json arr = json::array();
  for (Eigen::Index c = 0; c < s.generators().cols(); ++c) {
    arr.push_back(vector_to_json(s.generators().col(c)));
  }
  return json{{"dim", s.dim()}, {"rank", s.rank()}, {"vectors", arr}}.dump(indent);
}

Subspace subspace_from_json(const std::string& text, double eps) {
  const json doc = parse_text(text);
  const std::vector<Eigen::VectorXcd> vectors = vectors_from_doc(doc);
  Eigen::MatrixXcd cols(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    cols.col(static_cast<Eigen::Index>(c)) = vectors[c];
  }
  const Subspace s = Subspace::span_of(cols, eps);
  if (doc.contains("rank") && require_int(doc, "rank", 0, kMaxModes) != s.rank()) {
    throw std::invalid_argument("declared rank differs from the span of the vectors");
  }
  return s;
}

std::string report_to_json(const AxiomReport& report, int indent) {
  json axioms = json::array();
  for (const AxiomResult& r : report.axioms) {
    axioms.push_back(json{
        {"axiom", r.axiom}, {"cases", r.cases}, {"holds", r.holds}, {"note", r.note}});
  }
  json doc{{"axioms", axioms},
           {"dim", report.dim},
           {"domain_size", report.domain_size},
           {"epsilon", report.epsilon},
           {"particles", report.particles},
           {"samples", report.samples},
           {"seed", report.seed}};
  if (report.fusion_witness.has_value()) {
    doc["fusion_witness"] = json{{"atom_a", vector_to_json(report.fusion_witness->atom_a)},
                                 {"atom_b", vector_to_json(report.fusion_witness->atom_b)},
                                 {"skew_atom", vector_to_json(report.fusion_witness->skew_atom)}};
  }
  return doc.dump(indent);
}

ParsedInput parse_input(const std::string& text) {
  const json doc = parse_text(text);
  ParsedInput out;
  if (doc.contains("coeffs")) {
    out.state = tensor_from_doc(doc);
  } else if (doc.contains("vectors")) {
    out.vectors = vectors_from_doc(doc);
  } else {
    throw std::invalid_argument("input must contain either 'coeffs' or 'vectors'");
  }
  return out;
}

}  // namespace fermereo
