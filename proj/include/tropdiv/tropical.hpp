#pragma once

#include <tropdiv/rational.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tropdiv {

/// Ordered tangency profile (alpha_1, ..., alpha_n) with n >= 3 and
/// d = sum alpha_i >= 1.
class TangencyProfile {
 public:
  explicit TangencyProfile(std::vector<int> alpha);

  const std::vector<int>& alpha() const { return alpha_; }
  int length() const { return static_cast<int>(alpha_.size()); }
  int degree() const { return degree_; }
  int at(int marking) const { return alpha_[static_cast<std::size_t>(marking - 1)]; }

  /// (d, 0, ..., 0) of length n.
  static TangencyProfile maximal_contact(int d, int n);

 private:
  std::vector<int> alpha_;
  int degree_;
};

/// Image of a vertex: the origin of R>=0, or its interior.
enum class Level { Zero, Positive };

struct Vertex {
  int id = 0;
  int degree = 0;
  Level level = Level::Zero;
};

/// Oriented edge; the continuity equation reads f(to) = f(from) + slope * len.
struct Edge {
  int from = 0;
  int to = 0;
  long slope = 0;
};

struct Leg {
  int marking = 0;  // 1..n
  int vertex = 0;
};

/// Combinatorial type of a stable tropical map to R>=0: a marked tree
/// with vertex degrees, levels, and edge slopes.
struct CombinatorialType {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Leg> legs;
};

enum class ViolationKind {
  MalformedMarkings,
  NotATree,
  DegreeSumMismatch,
  BalancingFailure,
  UnstableVertex,
  LevelInconsistency,
  Unrealizable,
};

struct Violation {
  ViolationKind kind;
  int subject = -1;  // vertex id or edge index where applicable
  std::string detail;
};

const char* violation_name(ViolationKind kind);

/// Full invariant check. Returns the first violation found, or nullopt.
/// Realizability (existence of strictly positive edge lengths and
/// positive-vertex positions solving the continuity system) is decided
/// by exact Fourier-Motzkin elimination.
std::optional<Violation> validate(const CombinatorialType& t,
                                  const TangencyProfile& alpha);

/// Dimension of the tropical moduli cone: number of variables
/// (edge lengths plus positions of Positive vertices) minus the rank
/// of the continuity system. Requires a valid type.
int cone_dimension(const CombinatorialType& t, const TangencyProfile& alpha);

/// Canonical string form, invariant under marking-preserving isomorphism.
std::string canonical_serialization(const CombinatorialType& t);

/// Lowercase-hex SHA-256 digest of canonical_serialization(t).
std::string canonical_key(const CombinatorialType& t);

enum class ShapeKind { Rocket, Airborne, Binary };

const char* shape_name(ShapeKind kind);

struct RocketShape {
  int k = 0;
  std::vector<int> degrees;                  // d_0, ..., d_k
  std::vector<long> slopes;                  // m_1, ..., m_k
  std::vector<std::vector<int>> markings;    // A_0, ..., A_k, each sorted
};

struct BinaryShape {
  std::vector<int> side1, side2;  // A_1, A_2, sorted; smallest marking in side1
  int d1 = 0, d2 = 0;
};

struct ShapeInfo {
  ShapeKind kind = ShapeKind::Airborne;
  std::optional<RocketShape> rocket;
  std::optional<BinaryShape> binary;
};

struct NotADivisorType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Taxonomy of one-dimensional types. Throws NotADivisorType if the
/// cone dimension is not 1 or the type matches none of the families.
ShapeInfo classify_shape(const CombinatorialType& t, const TangencyProfile& alpha);

struct Role {
  enum Kind { Alien, Airborne, Terrestrial } kind = Terrestrial;
  int i = 0, j = 0;  // the alien pair, when kind == Alien

  std::string to_string() const;
};

/// Alien(i,j) when one component has degree 0 and carries exactly the
/// markings {x_i, x_j}; Airborne for the airborne type; else Terrestrial.
Role classify_role(const CombinatorialType& t, const TangencyProfile& alpha);

/// Stable marked dual graph: either a single smooth vertex, or a tree
/// whose vertices carry marking sets and have >= 3 special points.
struct StableDualGraph {
  bool smooth = false;
  std::vector<std::vector<int>> vertex_markings;  // sorted per vertex
  std::vector<std::pair<int, int>> edges;         // indices into vertex_markings

  int vertex_count() const { return static_cast<int>(vertex_markings.size()); }

  /// For each edge, the set of markings on the `first`-endpoint side.
  std::vector<std::vector<int>> edge_partitions() const;
};

/// Forget degrees, slopes and levels; contract vertices with fewer than
/// three special points (markings + incident edges), lowest id first.
StableDualGraph stabilize(const CombinatorialType& t);

// Taxonomy constructors (used by the enumerator and in tests).
CombinatorialType make_airborne(const TangencyProfile& alpha);
CombinatorialType make_binary(const TangencyProfile& alpha,
                              const std::vector<int>& side1);
CombinatorialType make_rocket(const TangencyProfile& alpha,
                              const std::vector<std::vector<int>>& parts,  // A_0..A_k
                              const std::vector<int>& external_degrees);   // d_1..d_k

// JSON wire format; field names are fixed.
nlohmann::ordered_json type_to_json(const CombinatorialType& t);
CombinatorialType type_from_json(const nlohmann::json& j);

}  // namespace tropdiv
