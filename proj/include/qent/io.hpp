// JSON file formats.
//
//   matrix:   {"dim": n, "data": [[re, im], ...]}   n*n entries, row-major
//   ensemble: {"weights": [...], "vectors": [[[re, im], ...], ...]}
//   chain:    {"site_dim": d, "length": L, "site_term": matrix, "coupling_term": matrix}

#ifndef QENT_IO_HPP
#define QENT_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qent/capacity.hpp"
#include "qent/maxent.hpp"

namespace qent::io {

using Json = nlohmann::json;

ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

Ensemble ensemble_from_json(const Json& j);
Json ensemble_to_json(const Ensemble& ens);

ChainSpec chain_from_json(const Json& j);

/// Parses a whole file; ParseError on unreadable or malformed input.
Json read_json_file(const std::filesystem::path& path);

}  // namespace qent::io

#endif  // QENT_IO_HPP
