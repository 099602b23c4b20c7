#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "lpa/forms.hpp"
#include "lpa/poset.hpp"
#include "lpa/script.hpp"
#include "lpa/toral_pairs.hpp"

namespace lpa::io {

using nlohmann::json;

/// Malformed input; the message names the offending field (and the line
/// for syntax errors).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses JSON text, reporting the line and column of syntax errors.
json parse_text(const std::string& text, const std::string& source = "<input>");
json read_file(const std::string& path);

/// {"n": int, "covers": [[p, q], ...]}; the cover list is the Hasse diagram.
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

/// {"support": [[p, q], ...], "coeffs": {"p,q": "a/b", ...}}; coeffs lists
/// only the terms whose coefficient is not 1 and may be omitted.
json form_to_json(const OneForm& phi);
OneForm form_from_json(const json& j);

json script_to_json(const ConstructionScript& s);
ConstructionScript script_from_json(const json& j);

/// [{"pair": [p, q], "coeff": "a/b"}, ...]
json coords_to_json(const MatrixCoords& coords);
json kernel_to_json(const KernelReport& k);
json pair_report_to_json(const PairReport& r);
json audit_to_json(const BuildResult& result);

/// Graphviz digraph of the Hasse diagram, elements ranked by height; edges
/// in `highlight` (e.g. a form's strict support) are drawn bold.
std::string to_dot(const Poset& p, const std::vector<Relation>& highlight = {});

}  // namespace lpa::io
