#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sds/engine.hpp"
#include "sds/matrix.hpp"

namespace sds {

/// Verdict schema:
///   { "outcome": "psd"|"not_psd"|"exhausted", "base": "tn"|"an"|"custom",
///     "witness": ["p/q",...]?, "witness_value": "p/q"?,
///     "certificate": { "scale_factor": "int",
///                      "leaves": [ {"word": [[perm],...], "form": "text"} ] }?,
///     "stats": { "nodes": int, "depth": int, "millis": int } }
/// Words are permutation arrays (1-based) for tn/an bases and plain child
/// index arrays for custom sets. with_millis=false omits the one field that
/// is not reproducible run to run.
nlohmann::json verdict_to_json(const Verdict& v, bool with_millis = true);

nlohmann::json matrix_to_json(const SubstMatrix& m);
SubstMatrix matrix_from_json(const nlohmann::json& j);

/// Loads a matrix file: either a single matrix (array of rows of "p/q"
/// strings) or a set (array of matrices). Every matrix must be column
/// stochastic mean; rejection messages name the matrix and the failing
/// column pair.
std::vector<SubstMatrix> load_matrix_file(const std::string& path);

/// Certificate files are the verdict JSON plus an "input" object
/// {"nvars": n, "form": text} so they re-verify standalone.
void write_certificate_file(const std::string& path, const Form& f, const Verdict& v);
struct CertificateFile {
  Form form;
  Verdict verdict;
};
CertificateFile read_certificate_file(const std::string& path);

/// In-memory round-trip of the same document (used by tests and the CLI).
nlohmann::json certificate_to_json(const Form& f, const Verdict& v);
CertificateFile certificate_from_json(const nlohmann::json& j);

}  // namespace sds
