#pragma once

#include <optional>
#include <string>
#include <vector>

#include "listcover/hypergraph.hpp"

namespace listcover {

/// List assignment of K_{m,n}: one list per vertex of M and of N over a
/// shared color space.
struct Assignment {
  ListFamily m_lists;
  ListFamily n_lists;
};

struct Coloring {
  std::vector<Color> m_side;
  std::vector<Color> n_side;
};

/// A proper coloring from the lists, or nullopt if none exists.
///
/// Enumerates M-side tracks in index order; for each, every N vertex needs a
/// color missing from the track's support. The first track that works wins
/// (parallel and serial agree on it).
std::optional<Coloring> find_proper_coloring(const Assignment& a);

/// True iff every minimal transversal of the M lists contains some N list.
bool is_bad_assignment_via_transversals(const Assignment& a);

struct WitnessReport {
  std::size_t m = 0;
  std::size_t n = 0;
  int list_size = 0;
  bool bad = false;
  bool method_agreement = false;
  std::string implied_bound;  // empty unless bad
};

/// Runs both criteria; throws InputError on mixed list sizes.
WitnessReport verify_witness(const Assignment& a);

/// True when dropping any single N list leaves a good assignment.
bool witness_is_minimal(const Assignment& a);

namespace serial {
std::optional<Coloring> find_proper_coloring(const Assignment& a);
}  // namespace serial

}  // namespace listcover
