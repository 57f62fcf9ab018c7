#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "listcover/hypergraph.hpp"
#include "listcover/numeric.hpp"

namespace listcover {

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A set of k-element edges. Edges are kept sorted and deduplicated.
class Cover {
 public:
  Cover() = default;
  Cover(int k, std::vector<Edge> edges);

  int k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool operator==(const Cover&) const = default;

 private:
  int k_ = 0;
  std::vector<Edge> edges_;
};

/// Finite non-negative value, or infinite when no k-cover exists.
class CoverValue {
 public:
  static CoverValue infinite() { return CoverValue(); }
  static CoverValue finite(BigInt v) {
    CoverValue out;
    out.value_ = std::move(v);
    return out;
  }

  bool is_infinite() const { return !value_.has_value(); }
  const BigInt& value() const { return value_.value(); }
  std::string to_string() const { return value_ ? value_->str() : "inf"; }

  bool operator==(const CoverValue&) const = default;

 private:
  CoverValue() = default;
  std::optional<BigInt> value_;
};

/// True iff every target edge contains at least one cover edge.
bool verify_cover(const Cover& cover, const Hypergraph& targets);

namespace serial {
bool verify_cover(const Cover& cover, const Hypergraph& targets);
}  // namespace serial

struct CandidateSet {
  std::vector<Edge> edges;  // canonical order
  bool uncoverable = false; // some target has fewer than k members
};

/// All k-subsets of target edges; only these can usefully appear in a cover.
CandidateSet candidate_edges(const Hypergraph& targets, int k);

}  // namespace listcover
