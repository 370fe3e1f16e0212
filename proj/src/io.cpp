#include "qent/io.hpp"

#include <fstream>
#include <sstream>

namespace qent::io {

namespace {

Complex complex_from_json(const Json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw Error(ErrorKind::ParseError, "complex entry must be [re, im], got " + entry.dump());
  }
  return {entry[0].get<Real>(), entry[1].get<Real>()};
}

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Index positive_integer(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j) {
  const Index dim = positive_integer(j, "dim");
  if (dim > kDefaultDimensionCap) {
    throw Error(ErrorKind::DimensionOverflow, "matrix dim " + std::to_string(dim));
  }
  const Json& data = member(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != dim * dim) {
    throw Error(ErrorKind::ParseError, "matrix of dim " + std::to_string(dim) + " needs " +
                                           std::to_string(dim * dim) + " entries, got " +
                                           std::to_string(data.is_array() ? data.size() : 0));
  }
  ComplexMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c)
      m(r, c) = complex_from_json(data[static_cast<std::size_t>(r * dim + c)]);
  if (!m.allFinite()) throw Error(ErrorKind::ParseError, "matrix has non-finite entries");
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  return {{"dim", m.rows()}, {"data", std::move(data)}};
}

Ensemble ensemble_from_json(const Json& j) {
  const Json& weights = member(j, "weights");
  const Json& vectors = member(j, "vectors");
  if (!weights.is_array() || !vectors.is_array()) {
    throw Error(ErrorKind::ParseError, "\"weights\" and \"vectors\" must be arrays");
  }
  std::vector<Real> w;
  for (const auto& x : weights) {
    if (!x.is_number()) throw Error(ErrorKind::ParseError, "weights must be numbers");
    w.push_back(x.get<Real>());
  }
  std::vector<PureState> states;
  for (const auto& v : vectors) {
    if (!v.is_array() || v.empty()) throw Error(ErrorKind::ParseError, "empty state vector");
    ComplexVector psi(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) psi(static_cast<Index>(i)) = complex_from_json(v[i]);
    states.emplace_back(std::move(psi));
  }
  return Ensemble(ProbabilityVector(std::move(w)), std::move(states));
}

Json ensemble_to_json(const Ensemble& ens) {
  Json vectors = Json::array();
  for (const auto& s : ens.states()) {
    Json v = Json::array();
    for (Index i = 0; i < s.dim(); ++i) v.push_back(complex_to_json(s.vector()(i)));
    vectors.push_back(std::move(v));
  }
  const auto probs = ens.weights().probs();
  return {{"weights", std::vector<Real>(probs.begin(), probs.end())},
          {"vectors", std::move(vectors)}};
}

ChainSpec chain_from_json(const Json& j) {
  ChainSpec spec;
  spec.site_dim = positive_integer(j, "site_dim");
  spec.length = positive_integer(j, "length");
  spec.site_term = matrix_from_json(member(j, "site_term"));
  spec.coupling_term = matrix_from_json(member(j, "coupling_term"));
  spec.validate();
  return spec;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace qent::io
