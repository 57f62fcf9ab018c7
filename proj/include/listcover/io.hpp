#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "listcover/choosability.hpp"
#include "listcover/cover.hpp"
#include "listcover/formulas.hpp"
#include "listcover/hypergraph.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"

namespace listcover::io {

using nlohmann::json;

/// A family relabeled to dense ids; labels[id] is the color as it appeared in
/// the input (integers rendered in decimal).
struct LabeledFamily {
  ListFamily family;
  std::vector<std::string> labels;
};

/// Relabels colors 0..V-1 in order of first appearance. Colors may be JSON
/// integers or strings.
LabeledFamily family_from_json(const json& j);

/// Loads both sides over one label space, M lists first.
struct LabeledAssignment {
  Assignment assignment;
  std::vector<std::string> labels;
};
LabeledAssignment assignment_from_json(const json& m_side, const json& n_side);

json to_json(const ListFamily& f);
json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);
json to_json(const WeightedFamily& wf);
json to_json(const Cover& c);
/// Accepts {"k": k, "edges": [...]} or a family {"lists": [...]} of equal-size lists.
Cover cover_from_json(const json& j);
json to_json(const SolveReport& r);
json to_json(const WitnessReport& r);
json to_json(const OptimizeResult& r, OptimizeMode mode);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);
/// Compact single-line form plus newline; stable for golden files.
std::string dump(const json& j);

/// FNV-1a over the canonical dump, as 16 hex digits.
std::string digest(const json& j);

std::string rational_to_string(const Rational& r);

}  // namespace listcover::io
