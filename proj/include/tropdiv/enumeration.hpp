#pragma once

#include <tropdiv/tropical.hpp>

#include <json.hpp>

namespace tropdiv {

/// One boundary divisor of the mapping space: a canonically keyed
/// one-dimensional combinatorial type with its taxonomy datum.
struct DivisorEntry {
  std::string key;
  ShapeInfo shape;
  Role role;
  CombinatorialType type;
};

struct DivisorCatalog {
  TangencyProfile alpha;
  std::vector<DivisorEntry> types;  // sorted by key, no duplicates
  bool partial = false;             // oracle only: vertex budget too small

  int size() const { return static_cast<int>(types.size()); }
  int count_shape(ShapeKind kind) const;
  int count_role(Role::Kind kind) const;
  const DivisorEntry* find_alien(int i, int j) const;
  const DivisorEntry* find_airborne() const;
};

/// All boundary-divisor combinatorial types for alpha, one per
/// isomorphism class, following the rocket/airborne/binary taxonomy.
DivisorCatalog enumerate_divisor_types(const TangencyProfile& alpha);

/// N(alpha) for alpha = (d, 0, ..., 0) by the closed formula. The inner
/// alternating sum is evaluated over exact rationals; a non-integral
/// total throws std::logic_error.
Integer count_maximal_contact(int d, int n);

/// Independent oracle: exhaustive search over all marked trees on at
/// most max_vertices vertices, keeping valid types of cone dimension 1.
/// Rockets need at most d+1 vertices, so max_vertices >= max(2, d+1)
/// yields a complete catalog; otherwise the result is flagged partial.
DivisorCatalog oracle_enumerate(const TangencyProfile& alpha, int max_vertices);

nlohmann::ordered_json catalog_to_json(const DivisorCatalog& catalog);
std::string catalog_to_csv(const DivisorCatalog& catalog);

}  // namespace tropdiv
