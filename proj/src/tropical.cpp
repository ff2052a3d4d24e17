#include <tropdiv/tropical.hpp>

#include <tropdiv/linalg.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <openssl/evp.h>

namespace tropdiv {

TangencyProfile::TangencyProfile(std::vector<int> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.size() < 3) throw std::invalid_argument("tangency profile needs n >= 3");
  degree_ = 0;
  for (int a : alpha_) {
    if (a < 0) throw std::invalid_argument("tangency orders must be non-negative");
    degree_ += a;
  }
  if (degree_ < 1) throw std::invalid_argument("tangency profile needs d >= 1");
}

TangencyProfile TangencyProfile::maximal_contact(int d, int n) {
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  alpha.at(0) = d;
  return TangencyProfile(std::move(alpha));
}

const char* violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MalformedMarkings: return "MalformedMarkings";
    case ViolationKind::NotATree: return "NotATree";
    case ViolationKind::DegreeSumMismatch: return "DegreeSumMismatch";
    case ViolationKind::BalancingFailure: return "BalancingFailure";
    case ViolationKind::UnstableVertex: return "UnstableVertex";
    case ViolationKind::LevelInconsistency: return "LevelInconsistency";
    case ViolationKind::Unrealizable: return "Unrealizable";
  }
  return "?";
}

namespace {

struct Indexed {
  std::map<int, int> id_to_pos;            // vertex id -> position
  std::vector<std::vector<int>> adjacency; // positions of incident edges
  std::vector<std::vector<int>> legs_at;   // marking indices per vertex position
};

Indexed index_type(const CombinatorialType& t) {
  Indexed ix;
  for (std::size_t p = 0; p < t.vertices.size(); ++p) {
    ix.id_to_pos[t.vertices[p].id] = static_cast<int>(p);
  }
  ix.adjacency.resize(t.vertices.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    ix.adjacency[static_cast<std::size_t>(ix.id_to_pos.at(t.edges[e].from))].push_back(
        static_cast<int>(e));
    ix.adjacency[static_cast<std::size_t>(ix.id_to_pos.at(t.edges[e].to))].push_back(
        static_cast<int>(e));
  }
  ix.legs_at.resize(t.vertices.size());
  for (const Leg& leg : t.legs) {
    ix.legs_at[static_cast<std::size_t>(ix.id_to_pos.at(leg.vertex))].push_back(leg.marking);
  }
  return ix;
}

// Continuity system: columns are edge lengths then positions of
// Positive vertices; one homogeneous equation per edge.
struct ContinuitySystem {
  RationalMatrix equations;  // edges x vars
  int num_vars = 0;
  int num_lengths = 0;  // first num_lengths variables are edge lengths
};

ContinuitySystem continuity_system(const CombinatorialType& t) {
  ContinuitySystem sys;
  std::map<int, int> position_var;  // vertex id -> column, Positive only
  sys.num_lengths = static_cast<int>(t.edges.size());
  int next = sys.num_lengths;
  for (const Vertex& v : t.vertices) {
    if (v.level == Level::Positive) position_var[v.id] = next++;
  }
  sys.num_vars = next;
  sys.equations = RationalMatrix::Zero(static_cast<Eigen::Index>(t.edges.size()), sys.num_vars);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const Edge& edge = t.edges[e];
    sys.equations(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(e)) = edge.slope;
    auto from = position_var.find(edge.from);
    if (from != position_var.end()) {
      sys.equations(static_cast<Eigen::Index>(e), from->second) += 1;
    }
    auto to = position_var.find(edge.to);
    if (to != position_var.end()) {
      sys.equations(static_cast<Eigen::Index>(e), to->second) -= 1;
    }
  }
  return sys;
}

// Does the homogeneous system eq * x = 0 admit a solution with every
// coordinate strictly positive? Exact Fourier-Motzkin elimination.
bool has_strictly_positive_solution(const RationalMatrix& eq, int num_vars) {
  if (num_vars == 0) return true;
  RationalMatrix reduced = rref(eq);
  std::vector<Eigen::Index> pivots = pivot_columns(eq);
  std::vector<bool> is_pivot(static_cast<std::size_t>(num_vars), false);
  std::map<Eigen::Index, std::size_t> pivot_row;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[static_cast<std::size_t>(pivots[r])] = true;
    pivot_row[pivots[r]] = r;
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < num_vars; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  const std::size_t nfree = free_cols.size();

  // Each variable, expressed over the free variables, must be positive.
  std::vector<std::vector<Rational>> constraints;
  for (Eigen::Index v = 0; v < num_vars; ++v) {
    std::vector<Rational> expr(nfree, Rational(0));
    if (is_pivot[static_cast<std::size_t>(v)]) {
      const std::size_t row = pivot_row.at(v);
      for (std::size_t f = 0; f < nfree; ++f) {
        expr[f] = -reduced(static_cast<Eigen::Index>(row), free_cols[f]);
      }
    } else {
      for (std::size_t f = 0; f < nfree; ++f) {
        if (free_cols[f] == v) expr[f] = 1;
      }
    }
    bool all_zero = true;
    for (const Rational& c : expr) {
      if (c != 0) { all_zero = false; break; }
    }
    if (all_zero) return false;  // would require 0 > 0
    constraints.push_back(std::move(expr));
  }

  for (std::size_t var = 0; var < nfree; ++var) {
    std::vector<std::vector<Rational>> lowers, uppers, rest;
    for (auto& c : constraints) {
      if (c[var] > 0) lowers.push_back(std::move(c));
      else if (c[var] < 0) uppers.push_back(std::move(c));
      else rest.push_back(std::move(c));
    }
    constraints = std::move(rest);
    // One-sided constraints are always satisfiable by extreme choices.
    if (!lowers.empty() && !uppers.empty()) {
      for (const auto& lo : lowers) {
        for (const auto& up : uppers) {
          std::vector<Rational> combined(nfree, Rational(0));
          bool all_zero = true;
          for (std::size_t f = 0; f < nfree; ++f) {
            combined[f] = (-up[var]) * lo[f] + lo[var] * up[f];
            if (combined[f] != 0) all_zero = false;
          }
          if (all_zero) return false;
          constraints.push_back(std::move(combined));
        }
      }
    }
  }
  return true;
}

long slope_away_from(const Edge& e, int vertex_id) {
  return e.from == vertex_id ? e.slope : -e.slope;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

}  // namespace

std::optional<Violation> validate(const CombinatorialType& t,
                                  const TangencyProfile& alpha) {
  const int n = alpha.length();

  // Vertex ids unique, markings a bijection onto {1..n}.
  std::set<int> ids;
  for (const Vertex& v : t.vertices) {
    if (!ids.insert(v.id).second) {
      return Violation{ViolationKind::MalformedMarkings, v.id, "duplicate vertex id"};
    }
    if (v.degree < 0) {
      return Violation{ViolationKind::DegreeSumMismatch, v.id, "negative vertex degree"};
    }
  }
  std::set<int> seen_markings;
  for (const Leg& leg : t.legs) {
    if (leg.marking < 1 || leg.marking > n || !seen_markings.insert(leg.marking).second) {
      return Violation{ViolationKind::MalformedMarkings, leg.marking, "bad or repeated marking"};
    }
    if (!ids.count(leg.vertex)) {
      return Violation{ViolationKind::MalformedMarkings, leg.marking, "leg on missing vertex"};
    }
  }
  if (static_cast<int>(seen_markings.size()) != n) {
    return Violation{ViolationKind::MalformedMarkings, -1, "missing markings"};
  }

  // Tree: |E| = |V| - 1, connected, no self loops.
  if (t.vertices.empty()) return Violation{ViolationKind::NotATree, -1, "no vertices"};
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const Edge& edge = t.edges[e];
    if (!ids.count(edge.from) || !ids.count(edge.to) || edge.from == edge.to) {
      return Violation{ViolationKind::NotATree, static_cast<int>(e), "bad edge endpoints"};
    }
  }
  if (t.edges.size() != t.vertices.size() - 1) {
    return Violation{ViolationKind::NotATree, -1, "edge count != vertex count - 1"};
  }
  const Indexed ix = index_type(t);
  {
    std::vector<bool> visited(t.vertices.size(), false);
    std::vector<int> stack{0};
    visited[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      const int vid = t.vertices[static_cast<std::size_t>(p)].id;
      for (int e : ix.adjacency[static_cast<std::size_t>(p)]) {
        const Edge& edge = t.edges[static_cast<std::size_t>(e)];
        const int other = ix.id_to_pos.at(edge.from == vid ? edge.to : edge.from);
        if (!visited[static_cast<std::size_t>(other)]) {
          visited[static_cast<std::size_t>(other)] = true;
          ++reached;
          stack.push_back(other);
        }
      }
    }
    if (reached != t.vertices.size()) {
      return Violation{ViolationKind::NotATree, -1, "disconnected"};
    }
  }

  int degree_sum = 0;
  for (const Vertex& v : t.vertices) degree_sum += v.degree;
  if (degree_sum != alpha.degree()) {
    return Violation{ViolationKind::DegreeSumMismatch, -1, "vertex degrees do not sum to d"};
  }

  // Balancing: d_v = sum of outgoing slopes + sum of leg tangencies.
  // This doubles as the stored-versus-recomputed slope cross-check:
  // on a tree, balancing at every vertex forces the slopes.
  for (std::size_t p = 0; p < t.vertices.size(); ++p) {
    const Vertex& v = t.vertices[p];
    long rhs = 0;
    for (int e : ix.adjacency[p]) rhs += slope_away_from(t.edges[static_cast<std::size_t>(e)], v.id);
    for (int m : ix.legs_at[p]) rhs += alpha.at(m);
    if (rhs != v.degree) {
      return Violation{ViolationKind::BalancingFailure, v.id, "balancing fails"};
    }
  }

  for (std::size_t p = 0; p < t.vertices.size(); ++p) {
    const Vertex& v = t.vertices[p];
    const std::size_t valence = ix.adjacency[p].size() + ix.legs_at[p].size();
    if (v.degree == 0 && valence < 3) {
      return Violation{ViolationKind::UnstableVertex, v.id, "degree 0 and valence < 3"};
    }
  }

  // Local level consistency along each edge.
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const Edge& edge = t.edges[e];
    const Level from = t.vertices[static_cast<std::size_t>(ix.id_to_pos.at(edge.from))].level;
    const Level to = t.vertices[static_cast<std::size_t>(ix.id_to_pos.at(edge.to))].level;
    bool ok = true;
    if (from == Level::Zero && to == Level::Zero) ok = (edge.slope == 0);
    if (from == Level::Zero && to == Level::Positive) ok = (edge.slope > 0);
    if (from == Level::Positive && to == Level::Zero) ok = (edge.slope < 0);
    if (!ok) {
      return Violation{ViolationKind::LevelInconsistency, static_cast<int>(e),
                       "edge slope incompatible with endpoint levels"};
    }
  }

  const ContinuitySystem sys = continuity_system(t);
  if (!has_strictly_positive_solution(sys.equations, sys.num_vars)) {
    return Violation{ViolationKind::Unrealizable, -1,
                     "continuity system has no strictly positive solution"};
  }
  return std::nullopt;
}

int cone_dimension(const CombinatorialType& t, const TangencyProfile& alpha) {
  if (auto v = validate(t, alpha)) {
    throw std::invalid_argument(std::string("cone_dimension on invalid type: ") +
                                violation_name(v->kind));
  }
  const ContinuitySystem sys = continuity_system(t);
  return sys.num_vars - static_cast<int>(rank(sys.equations));
}

namespace {

std::string encode_rooted(const CombinatorialType& t, const Indexed& ix, int pos,
                          int parent_pos) {
  const Vertex& v = t.vertices[static_cast<std::size_t>(pos)];
  std::ostringstream label;
  label << "(d" << v.degree << (v.level == Level::Positive ? "P" : "Z") << "[";
  std::vector<int> markings = ix.legs_at[static_cast<std::size_t>(pos)];
  std::sort(markings.begin(), markings.end());
  for (std::size_t i = 0; i < markings.size(); ++i) {
    if (i) label << ",";
    label << markings[i];
  }
  label << "]";
  std::vector<std::string> children;
  for (int e : ix.adjacency[static_cast<std::size_t>(pos)]) {
    const Edge& edge = t.edges[static_cast<std::size_t>(e)];
    const int other = ix.id_to_pos.at(edge.from == v.id ? edge.to : edge.from);
    if (other == parent_pos) continue;
    std::ostringstream child;
    child << "{m" << slope_away_from(edge, v.id)
          << encode_rooted(t, ix, other, pos) << "}";
    children.push_back(child.str());
  }
  std::sort(children.begin(), children.end());
  for (const std::string& c : children) label << c;
  label << ")";
  return label.str();
}

}  // namespace

std::string canonical_serialization(const CombinatorialType& t) {
  const Indexed ix = index_type(t);
  std::string best;
  for (std::size_t p = 0; p < t.vertices.size(); ++p) {
    std::string enc = encode_rooted(t, ix, static_cast<int>(p), -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

std::string canonical_key(const CombinatorialType& t) {
  return sha256_hex(canonical_serialization(t));
}

const char* shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Rocket: return "rocket";
    case ShapeKind::Airborne: return "airborne";
    case ShapeKind::Binary: return "binary";
  }
  return "?";
}

ShapeInfo classify_shape(const CombinatorialType& t, const TangencyProfile& alpha) {
  if (auto v = validate(t, alpha)) {
    throw std::invalid_argument(std::string("classify_shape on invalid type: ") +
                                violation_name(v->kind));
  }
  if (cone_dimension(t, alpha) != 1) {
    throw NotADivisorType("tropical moduli cone is not one-dimensional");
  }
  const Indexed ix = index_type(t);

  if (t.vertices.size() == 1) {
    // One-dimensional forces the single vertex into the interior.
    ShapeInfo info;
    info.kind = ShapeKind::Airborne;
    return info;
  }

  std::vector<int> positive_positions;
  for (std::size_t p = 0; p < t.vertices.size(); ++p) {
    if (t.vertices[p].level == Level::Positive) positive_positions.push_back(static_cast<int>(p));
  }

  if (positive_positions.empty()) {
    if (t.vertices.size() != 2 || t.edges.size() != 1 || t.edges[0].slope != 0) {
      throw NotADivisorType("level-zero type outside the binary family");
    }
    BinaryShape b;
    std::vector<int> m0 = ix.legs_at[0], m1 = ix.legs_at[1];
    std::sort(m0.begin(), m0.end());
    std::sort(m1.begin(), m1.end());
    const bool zero_first =
        !m0.empty() && (m1.empty() || m0.front() < m1.front());
    const std::size_t first = zero_first ? 0 : 1;
    const std::size_t second = 1 - first;
    b.side1 = zero_first ? m0 : m1;
    b.side2 = zero_first ? m1 : m0;
    b.d1 = t.vertices[first].degree;
    b.d2 = t.vertices[second].degree;
    ShapeInfo info;
    info.kind = ShapeKind::Binary;
    info.binary = std::move(b);
    return info;
  }

  if (positive_positions.size() != 1) {
    throw NotADivisorType("more than one positive-level vertex");
  }
  const int c0 = positive_positions[0];
  const int c0_id = t.vertices[static_cast<std::size_t>(c0)].id;
  // Every other vertex must be a level-zero neighbour of C0.
  if (ix.adjacency[static_cast<std::size_t>(c0)].size() != t.vertices.size() - 1) {
    throw NotADivisorType("positive vertex is not central");
  }
  RocketShape r;
  r.k = static_cast<int>(t.vertices.size()) - 1;
  r.degrees.push_back(t.vertices[static_cast<std::size_t>(c0)].degree);
  r.markings.push_back(ix.legs_at[static_cast<std::size_t>(c0)]);
  std::sort(r.markings.back().begin(), r.markings.back().end());
  for (std::size_t p = 0; p < t.vertices.size(); ++p) {
    if (static_cast<int>(p) == c0) continue;
    const Vertex& v = t.vertices[p];
    if (ix.adjacency[p].size() != 1) throw NotADivisorType("external component not a leaf");
    const Edge& edge = t.edges[static_cast<std::size_t>(ix.adjacency[p][0])];
    const long m = slope_away_from(edge, v.id);  // slope toward C0
    (void)c0_id;
    if (m <= 0) throw NotADivisorType("non-positive slope toward the central vertex");
    r.degrees.push_back(v.degree);
    r.slopes.push_back(m);
    r.markings.push_back(ix.legs_at[p]);
    std::sort(r.markings.back().begin(), r.markings.back().end());
  }
  ShapeInfo info;
  info.kind = ShapeKind::Rocket;
  info.rocket = std::move(r);
  return info;
}

std::string Role::to_string() const {
  switch (kind) {
    case Alien: return "alien(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Airborne: return "airborne";
    case Terrestrial: return "terrestrial";
  }
  return "?";
}

Role classify_role(const CombinatorialType& t, const TangencyProfile& alpha) {
  const ShapeInfo shape = classify_shape(t, alpha);
  Role role;
  if (shape.kind == ShapeKind::Airborne) {
    role.kind = Role::Airborne;
    return role;
  }
  if (shape.kind == ShapeKind::Rocket) {
    const RocketShape& r = *shape.rocket;
    if (r.k == 1 && r.degrees[0] == 0 && r.markings[0].size() == 2) {
      role.kind = Role::Alien;
      role.i = r.markings[0][0];
      role.j = r.markings[0][1];
      return role;
    }
  }
  if (shape.kind == ShapeKind::Binary) {
    const BinaryShape& b = *shape.binary;
    if (b.d1 == 0 && b.side1.size() == 2) {
      role.kind = Role::Alien;
      role.i = b.side1[0];
      role.j = b.side1[1];
      return role;
    }
    if (b.d2 == 0 && b.side2.size() == 2) {
      role.kind = Role::Alien;
      role.i = b.side2[0];
      role.j = b.side2[1];
      return role;
    }
  }
  role.kind = Role::Terrestrial;
  return role;
}

std::vector<std::vector<int>> StableDualGraph::edge_partitions() const {
  std::vector<std::vector<int>> out;
  const std::size_t nv = vertex_markings.size();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    // Collect vertices on the `first` side of edge e.
    std::vector<bool> visited(nv, false);
    std::vector<int> stack{edges[e].first};
    visited[static_cast<std::size_t>(edges[e].first)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t f = 0; f < edges.size(); ++f) {
        if (f == e) continue;
        int other = -1;
        if (edges[f].first == v) other = edges[f].second;
        if (edges[f].second == v) other = edges[f].first;
        if (other >= 0 && !visited[static_cast<std::size_t>(other)]) {
          visited[static_cast<std::size_t>(other)] = true;
          stack.push_back(other);
        }
      }
    }
    std::vector<int> markings;
    for (std::size_t v = 0; v < nv; ++v) {
      if (visited[v]) {
        markings.insert(markings.end(), vertex_markings[v].begin(), vertex_markings[v].end());
      }
    }
    std::sort(markings.begin(), markings.end());
    out.push_back(std::move(markings));
  }
  return out;
}

StableDualGraph stabilize(const CombinatorialType& t) {
  // Mutable tree: vertex id -> (markings, neighbour ids).
  std::map<int, std::pair<std::set<int>, std::set<int>>> g;
  for (const Vertex& v : t.vertices) g[v.id];
  for (const Edge& e : t.edges) {
    g[e.from].second.insert(e.to);
    g[e.to].second.insert(e.from);
  }
  for (const Leg& leg : t.legs) g[leg.vertex].first.insert(leg.marking);

  while (g.size() > 1) {
    int unstable = -1;
    for (const auto& [id, data] : g) {
      if (data.first.size() + data.second.size() < 3) {
        unstable = id;
        break;
      }
    }
    if (unstable < 0) break;
    auto node = g.extract(unstable);
    const std::set<int>& markings = node.mapped().first;
    const std::set<int>& neighbours = node.mapped().second;
    if (neighbours.size() == 1) {
      const int u = *neighbours.begin();
      g[u].second.erase(unstable);
      g[u].first.insert(markings.begin(), markings.end());
    } else {  // two neighbours, no markings: splice the path
      const int u = *neighbours.begin();
      const int w = *std::next(neighbours.begin());
      g[u].second.erase(unstable);
      g[w].second.erase(unstable);
      g[u].second.insert(w);
      g[w].second.insert(u);
    }
  }

  StableDualGraph out;
  std::map<int, int> id_to_index;
  for (const auto& [id, data] : g) {
    id_to_index[id] = static_cast<int>(out.vertex_markings.size());
    out.vertex_markings.emplace_back(data.first.begin(), data.first.end());
  }
  for (const auto& [id, data] : g) {
    for (int u : data.second) {
      if (id < u) out.edges.emplace_back(id_to_index[id], id_to_index[u]);
    }
  }
  out.smooth = out.vertex_markings.size() == 1;
  return out;
}

CombinatorialType make_airborne(const TangencyProfile& alpha) {
  CombinatorialType t;
  t.vertices.push_back({0, alpha.degree(), Level::Positive});
  for (int i = 1; i <= alpha.length(); ++i) t.legs.push_back({i, 0});
  return t;
}

CombinatorialType make_binary(const TangencyProfile& alpha,
                              const std::vector<int>& side1) {
  CombinatorialType t;
  const std::set<int> first(side1.begin(), side1.end());
  int d1 = 0, d2 = 0;
  for (int i = 1; i <= alpha.length(); ++i) {
    if (first.count(i)) d1 += alpha.at(i); else d2 += alpha.at(i);
  }
  t.vertices.push_back({0, d1, Level::Zero});
  t.vertices.push_back({1, d2, Level::Zero});
  t.edges.push_back({0, 1, 0});
  for (int i = 1; i <= alpha.length(); ++i) {
    t.legs.push_back({i, first.count(i) ? 0 : 1});
  }
  return t;
}

CombinatorialType make_rocket(const TangencyProfile& alpha,
                              const std::vector<std::vector<int>>& parts,
                              const std::vector<int>& external_degrees) {
  if (parts.size() != external_degrees.size() + 1) {
    throw std::invalid_argument("make_rocket: parts must be A_0..A_k");
  }
  const int k = static_cast<int>(external_degrees.size());
  CombinatorialType t;
  int external_total = 0;
  for (int dj : external_degrees) external_total += dj;
  t.vertices.push_back({0, alpha.degree() - external_total, Level::Positive});
  for (int j = 1; j <= k; ++j) {
    const int dj = external_degrees[static_cast<std::size_t>(j - 1)];
    int tangency = 0;
    for (int m : parts[static_cast<std::size_t>(j)]) tangency += alpha.at(m);
    t.vertices.push_back({j, dj, Level::Zero});
    t.edges.push_back({j, 0, dj - tangency});  // slope toward C0
  }
  for (int j = 0; j <= k; ++j) {
    for (int m : parts[static_cast<std::size_t>(j)]) t.legs.push_back({m, j});
  }
  return t;
}

nlohmann::ordered_json type_to_json(const CombinatorialType& t) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Vertex& v : t.vertices) {
    j["vertices"].push_back({{"id", v.id},
                             {"degree", v.degree},
                             {"level", v.level == Level::Positive ? "positive" : "zero"}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : t.edges) {
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"slope", e.slope}});
  }
  j["legs"] = nlohmann::ordered_json::array();
  for (const Leg& leg : t.legs) {
    j["legs"].push_back({{"marking", leg.marking}, {"vertex", leg.vertex}});
  }
  return j;
}

CombinatorialType type_from_json(const nlohmann::json& j) {
  CombinatorialType t;
  for (const auto& v : j.at("vertices")) {
    const std::string level = v.at("level").get<std::string>();
    if (level != "zero" && level != "positive") {
      throw std::invalid_argument("bad level: " + level);
    }
    t.vertices.push_back({v.at("id").get<int>(), v.at("degree").get<int>(),
                          level == "positive" ? Level::Positive : Level::Zero});
  }
  for (const auto& e : j.at("edges")) {
    t.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                       e.at("slope").get<long>()});
  }
  for (const auto& leg : j.at("legs")) {
    t.legs.push_back({leg.at("marking").get<int>(), leg.at("vertex").get<int>()});
  }
  return t;
}

}  // namespace tropdiv
