#include "listcover/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace listcover::io {

namespace {

class LabelTable {
 public:
  Color id(const json& label) {
    std::string key;
    if (label.is_number_integer()) {
      key = std::to_string(label.get<long long>());
    } else if (label.is_string()) {
      key = label.get<std::string>();
    } else {
      throw InputError("colors must be integers or strings");
    }
    auto [it, inserted] = ids_.try_emplace(key, static_cast<Color>(labels_.size()));
    if (inserted) labels_.push_back(key);
    return it->second;
  }
  std::vector<std::string>& labels() { return labels_; }

 private:
  std::map<std::string, Color> ids_;
  std::vector<std::string> labels_;
};

std::vector<Edge> read_lists(const json& j, LabelTable& table) {
  if (!j.is_object() || !j.contains("lists") || !j["lists"].is_array())
    throw InputError("expected an object with a \"lists\" array");
  std::vector<Edge> lists;
  for (const json& list : j["lists"]) {
    if (!list.is_array()) throw InputError("each list must be an array of colors");
    Edge e;
    for (const json& c : list) {
      const Color id = table.id(c);
      if (e.contains(id)) throw InputError("duplicate color inside a list");
      e.insert(id);
    }
    lists.push_back(e);
  }
  return lists;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(e.members());
  return out;
}

Edge edge_from_json(const json& j) {
  if (!j.is_array()) throw InputError("an edge must be an array of color ids");
  Edge e;
  for (const json& c : j) {
    if (!c.is_number_integer() || c.get<long long>() < 0)
      throw InputError("edge members must be non-negative integers");
    e.insert(static_cast<Color>(c.get<long long>()));
  }
  return e;
}

}  // namespace

LabeledFamily family_from_json(const json& j) {
  LabelTable table;
  std::vector<Edge> lists = read_lists(j, table);
  if (lists.empty()) throw InputError("a family needs at least one list");
  return {ListFamily(std::move(lists), static_cast<Color>(table.labels().size())),
          std::move(table.labels())};
}

LabeledAssignment assignment_from_json(const json& m_side, const json& n_side) {
  LabelTable table;
  std::vector<Edge> ms = read_lists(m_side, table);
  std::vector<Edge> ns = read_lists(n_side, table);
  const auto count = static_cast<Color>(table.labels().size());
  return {Assignment{ListFamily(std::move(ms), count), ListFamily(std::move(ns), count)},
          std::move(table.labels())};
}

json to_json(const ListFamily& f) { return json{{"lists", edges_to_json(f.lists())}}; }

json to_json(const Hypergraph& h) {
  return json{{"vertex_count", h.vertex_count()}, {"edges", edges_to_json(h.edges())}};
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edges") || !j.contains("vertex_count"))
    throw InputError("expected {\"vertex_count\": V, \"edges\": [...]}");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) edges.push_back(edge_from_json(e));
  return Hypergraph(j["vertex_count"].get<Color>(), std::move(edges));
}

json to_json(const WeightedFamily& wf) {
  json weights = json::object();
  json classes = json::array();
  for (const auto& cls : wf.classes) {
    weights[std::to_string(cls.representative)] = cls.weight();
    classes.push_back(cls.members.members());
  }
  return json{{"lists", edges_to_json(wf.family.lists())}, {"weights", weights}, {"classes", classes}};
}

json to_json(const Cover& c) { return json{{"k", c.k()}, {"edges", edges_to_json(c.edges())}}; }

Cover cover_from_json(const json& j) {
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const json& e : j["edges"]) edges.push_back(edge_from_json(e));
  } else if (j.contains("lists")) {
    for (const json& e : j["lists"]) edges.push_back(edge_from_json(e));
  } else {
    throw InputError("expected a cover {\"k\", \"edges\"} or a family {\"lists\"}");
  }
  int k = j.contains("k") ? j["k"].get<int>() : (edges.empty() ? 0 : edges.front().size());
  return Cover(k, std::move(edges));
}

json to_json(const SolveReport& r) {
  json out{{"value", r.value.to_string()},
           {"infinite", r.value.is_infinite()},
           {"cover", r.cover ? edges_to_json(r.cover->edges()) : json::array()},
           {"nodes", r.nodes_explored},
           {"ms", r.elapsed.count()},
           {"method", std::string(to_string(r.method))}};
  if (!r.optimal) out["optimal"] = false;
  return out;
}

json to_json(const WitnessReport& r) {
  return json{{"m", r.m},
              {"n", r.n},
              {"list_size", r.list_size},
              {"bad", r.bad},
              {"method_agreement", r.method_agreement},
              {"implied_bound", r.implied_bound}};
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json to_json(const OptimizeResult& r, OptimizeMode mode) {
  json exact_alpha = json::array();
  for (const Rational& a : r.exact_alpha.a) exact_alpha.push_back(rational_to_string(a));
  return json{{"mode", std::string(to_string(mode))},
              {"value", r.value},
              {"alpha", r.alpha},
              {"exact_value", rational_to_string(r.exact_value)},
              {"exact_value_decimal", r.exact_value.convert_to<double>()},
              {"exact_alpha", exact_alpha},
              {"grid_value", r.grid_value},
              {"grid_points", r.grid_points},
              {"refine_iterations", r.refine_iterations},
              {"stated_bound", 0.4643}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump(j);
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace listcover::io
