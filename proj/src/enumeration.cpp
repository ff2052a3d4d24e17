#include <tropdiv/enumeration.hpp>

#include <tropdiv/combinatorics.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace tropdiv {

int DivisorCatalog::count_shape(ShapeKind kind) const {
  int c = 0;
  for (const DivisorEntry& e : types) c += e.shape.kind == kind;
  return c;
}

int DivisorCatalog::count_role(Role::Kind kind) const {
  int c = 0;
  for (const DivisorEntry& e : types) c += e.role.kind == kind;
  return c;
}

const DivisorEntry* DivisorCatalog::find_alien(int i, int j) const {
  for (const DivisorEntry& e : types) {
    if (e.role.kind == Role::Alien && e.role.i == std::min(i, j) &&
        e.role.j == std::max(i, j)) {
      return &e;
    }
  }
  return nullptr;
}

const DivisorEntry* DivisorCatalog::find_airborne() const {
  for (const DivisorEntry& e : types) {
    if (e.role.kind == Role::Airborne) return &e;
  }
  return nullptr;
}

namespace {

Role role_of_shape(const ShapeInfo& shape) {
  Role role;
  if (shape.kind == ShapeKind::Airborne) {
    role.kind = Role::Airborne;
    return role;
  }
  if (shape.kind == ShapeKind::Rocket) {
    const RocketShape& r = *shape.rocket;
    if (r.k == 1 && r.degrees[0] == 0 && r.markings[0].size() == 2) {
      role = {Role::Alien, r.markings[0][0], r.markings[0][1]};
      return role;
    }
  }
  if (shape.kind == ShapeKind::Binary) {
    const BinaryShape& b = *shape.binary;
    if (b.d1 == 0 && b.side1.size() == 2) {
      role = {Role::Alien, b.side1[0], b.side1[1]};
      return role;
    }
    if (b.d2 == 0 && b.side2.size() == 2) {
      role = {Role::Alien, b.side2[0], b.side2[1]};
      return role;
    }
  }
  role.kind = Role::Terrestrial;
  return role;
}

void insert_entry(std::map<std::string, DivisorEntry>& seen, CombinatorialType type,
                  ShapeInfo shape) {
  std::string key = canonical_key(type);
  if (seen.count(key)) return;
  DivisorEntry entry;
  entry.key = key;
  entry.role = role_of_shape(shape);
  entry.shape = std::move(shape);
  entry.type = std::move(type);
  seen.emplace(std::move(key), std::move(entry));
}

ShapeInfo airborne_shape() {
  ShapeInfo s;
  s.kind = ShapeKind::Airborne;
  return s;
}

ShapeInfo binary_shape(const TangencyProfile& alpha, const std::vector<int>& side1,
                       const std::vector<int>& side2) {
  ShapeInfo s;
  s.kind = ShapeKind::Binary;
  BinaryShape b;
  b.side1 = side1;
  b.side2 = side2;
  for (int m : side1) b.d1 += alpha.at(m);
  for (int m : side2) b.d2 += alpha.at(m);
  s.binary = std::move(b);
  return s;
}

ShapeInfo rocket_shape(const TangencyProfile& alpha,
                       const std::vector<std::vector<int>>& parts,
                       const std::vector<int>& external_degrees, int d0) {
  ShapeInfo s;
  s.kind = ShapeKind::Rocket;
  RocketShape r;
  r.k = static_cast<int>(external_degrees.size());
  r.degrees.push_back(d0);
  r.markings = parts;
  for (int j = 1; j <= r.k; ++j) {
    const int dj = external_degrees[static_cast<std::size_t>(j - 1)];
    int tangency = 0;
    for (int m : parts[static_cast<std::size_t>(j)]) tangency += alpha.at(m);
    r.degrees.push_back(dj);
    r.slopes.push_back(dj - tangency);
  }
  s.rocket = std::move(r);
  return s;
}

// Ordered tuples (d_1, ..., d_k) with every d_j >= 1 and sum <= total.
void external_degree_tuples(int k, int total, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  int used = 0;
  for (int dj : current) used += dj;
  const int remaining_slots = k - static_cast<int>(current.size()) - 1;
  for (int dj = 1; dj + used + remaining_slots <= total; ++dj) {
    current.push_back(dj);
    external_degree_tuples(k, total, current, out);
    current.pop_back();
  }
}

}  // namespace

DivisorCatalog enumerate_divisor_types(const TangencyProfile& alpha) {
  const int n = alpha.length();
  const int d = alpha.degree();
  std::map<std::string, DivisorEntry> seen;

  insert_entry(seen, make_airborne(alpha), airborne_shape());

  // Binaries: partitions A_1 | A_2 with d_j = sum of tangencies on A_j
  // and both vertices stable. Side 1 contains marking 1.
  for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    std::vector<int> side1{1}, side2;
    int d1 = alpha.at(1), d2 = 0;
    for (int i = 2; i <= n; ++i) {
      if (mask & (1u << (i - 2))) {
        side1.push_back(i);
        d1 += alpha.at(i);
      } else {
        side2.push_back(i);
        d2 += alpha.at(i);
      }
    }
    const bool stable1 = d1 > 0 || side1.size() >= 2;
    const bool stable2 = d2 > 0 || side2.size() >= 2;
    if (!stable1 || !stable2) continue;
    insert_entry(seen, make_binary(alpha, side1), binary_shape(alpha, side1, side2));
  }

  // Rockets: k external components with degrees d_j >= 1, slopes
  // m_j = d_j - sum of tangencies on A_j required positive, and the
  // central vertex stable. Duplicates (permuted unmarked components)
  // collapse under the canonical key.
  for (int k = 1; k <= d; ++k) {
    std::vector<std::vector<int>> degree_tuples;
    std::vector<int> scratch;
    external_degree_tuples(k, d, scratch, degree_tuples);
    for (const std::vector<int>& degrees : degree_tuples) {
      int d0 = d;
      for (int dj : degrees) d0 -= dj;
      // Mixed-radix assignment of markings to components 0..k.
      std::vector<int> assign(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(k) + 1);
        for (int i = 1; i <= n; ++i) {
          parts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i - 1)])].push_back(i);
        }
        bool ok = d0 > 0 || static_cast<int>(parts[0].size()) + k >= 3;
        for (int j = 1; ok && j <= k; ++j) {
          int tangency = 0;
          for (int m : parts[static_cast<std::size_t>(j)]) tangency += alpha.at(m);
          ok = degrees[static_cast<std::size_t>(j - 1)] - tangency > 0;
        }
        if (ok) {
          insert_entry(seen, make_rocket(alpha, parts, degrees),
                       rocket_shape(alpha, parts, degrees, d0));
        }
        // Advance the assignment counter.
        int pos = 0;
        while (pos < n && assign[static_cast<std::size_t>(pos)] == k) {
          assign[static_cast<std::size_t>(pos)] = 0;
          ++pos;
        }
        if (pos == n) break;
        ++assign[static_cast<std::size_t>(pos)];
      }
    }
  }

  DivisorCatalog catalog{alpha, {}, false};
  for (auto& [key, entry] : seen) catalog.types.push_back(std::move(entry));
  return catalog;
}

Integer count_maximal_contact(int d, int n) {
  if (d < 1 || n < 3) throw std::domain_error("count_maximal_contact: need d >= 1, n >= 3");
  Rational total = 0;
  for (int k = 1; k <= d; ++k) {
    for (int k1 = 0; k1 <= std::min(k, n - 1); ++k1) {
      // Inner alternating sum: (T(n-1,k1+1) + T(n-1,k1)) / k1!, assembled
      // directly from the inclusion-exclusion form. Intermediate terms
      // are genuine fractions; only the assembled result is integral.
      Rational inner = 0;
      for (int a = 0; a <= k1; ++a) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a + 1),
                      static_cast<unsigned long>(n - 1));
        Integer fa, fka;
        mpz_fac_ui(fa.get_mpz_t(), static_cast<unsigned long>(a));
        mpz_fac_ui(fka.get_mpz_t(), static_cast<unsigned long>(k1 - a));
        Rational term = make_rational(power, fa * fka);
        if ((k1 + a) % 2 == 0) inner += term; else inner -= term;
      }
      for (int d1 = 0; d1 <= d - k; ++d1) {
        const Integer ordered = binomial_ext(d1 + k1 - 1, k1 - 1);
        if (ordered == 0) continue;
        for (int d2 = 0; d2 <= d - k - d1; ++d2) {
          const Integer unordered = partitions_pk(k - k1, d2 + k - k1);
          total += inner * Rational(ordered * unordered);
        }
      }
    }
  }
  Integer binaries_and_airborne;
  mpz_ui_pow_ui(binaries_and_airborne.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  binaries_and_airborne -= n;
  total += Rational(binaries_and_airborne);
  if (total.get_den() != 1) {
    throw std::logic_error("count_maximal_contact: non-integral total");
  }
  return total.get_num();
}

namespace {

// All labeled trees on v vertices as edge lists (Pruefer decoding).
std::vector<std::vector<std::pair<int, int>>> labeled_trees(int v) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (v == 1) {
    out.push_back({});
    return out;
  }
  if (v == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(v - 2), 0);
  while (true) {
    std::vector<int> deg(static_cast<std::size_t>(v), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    std::vector<int> degree = deg;
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
      int leaf = -1;
      for (int u = 0; u < v; ++u) {
        if (degree[static_cast<std::size_t>(u)] == 1) { leaf = u; break; }
      }
      edges.emplace_back(leaf, s);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(s)];
    }
    int a = -1, b = -1;
    for (int u = 0; u < v; ++u) {
      if (degree[static_cast<std::size_t>(u)] == 1) (a < 0 ? a : b) = u;
    }
    edges.emplace_back(a, b);
    out.push_back(std::move(edges));

    int pos = 0;
    while (pos < v - 2 && seq[static_cast<std::size_t>(pos)] == v - 1) {
      seq[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == v - 2) break;
    ++seq[static_cast<std::size_t>(pos)];
  }
  return out;
}

// Slopes are forced by balancing: strip leaves inward, assigning to the
// leaf's unique edge the residual degree at the leaf.
std::vector<long> derive_slopes(int v, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& degrees,
                                const std::vector<long>& leg_tangency) {
  std::vector<long> residual(static_cast<std::size_t>(v));
  for (int u = 0; u < v; ++u) {
    residual[static_cast<std::size_t>(u)] =
        degrees[static_cast<std::size_t>(u)] - leg_tangency[static_cast<std::size_t>(u)];
  }
  std::vector<long> slopes(edges.size(), 0);
  std::vector<bool> edge_done(edges.size(), false), vertex_done(static_cast<std::size_t>(v), false);
  for (int step = 0; step + 1 < v; ++step) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edge_done[e]) continue;
      // A live leaf: a live vertex with exactly one live incident edge.
      for (int side = 0; side < 2; ++side) {
        const int leaf = side == 0 ? edges[e].first : edges[e].second;
        const int other = side == 0 ? edges[e].second : edges[e].first;
        if (vertex_done[static_cast<std::size_t>(leaf)]) continue;
        int live_incident = 0;
        for (std::size_t f = 0; f < edges.size(); ++f) {
          if (!edge_done[f] && (edges[f].first == leaf || edges[f].second == leaf)) ++live_incident;
        }
        if (live_incident != 1) continue;
        const long m = residual[static_cast<std::size_t>(leaf)];  // slope leaf -> other
        slopes[e] = side == 0 ? m : -m;
        residual[static_cast<std::size_t>(other)] += m;
        vertex_done[static_cast<std::size_t>(leaf)] = true;
        edge_done[e] = true;
        break;
      }
      if (edge_done[e]) break;
    }
  }
  return slopes;
}

}  // namespace

DivisorCatalog oracle_enumerate(const TangencyProfile& alpha, int max_vertices) {
  const int n = alpha.length();
  const int d = alpha.degree();
  std::map<std::string, DivisorEntry> seen;

  for (int v = 1; v <= max_vertices; ++v) {
    for (const auto& edges : labeled_trees(v)) {
      // Degree labelings: compositions of d into v non-negative parts.
      std::vector<int> degrees(static_cast<std::size_t>(v), 0);
      degrees[0] = d;
      while (true) {
        // Marking assignments.
        std::vector<int> assign(static_cast<std::size_t>(n), 0);
        while (true) {
          std::vector<long> leg_tangency(static_cast<std::size_t>(v), 0);
          std::vector<std::vector<int>> legs_at(static_cast<std::size_t>(v));
          for (int i = 1; i <= n; ++i) {
            const int at = assign[static_cast<std::size_t>(i - 1)];
            leg_tangency[static_cast<std::size_t>(at)] += alpha.at(i);
            legs_at[static_cast<std::size_t>(at)].push_back(i);
          }
          const std::vector<long> slopes = derive_slopes(v, edges, degrees, leg_tangency);
          // Level assignments.
          for (unsigned levels = 0; levels < (1u << v); ++levels) {
            CombinatorialType t;
            for (int u = 0; u < v; ++u) {
              t.vertices.push_back({u, degrees[static_cast<std::size_t>(u)],
                                    (levels & (1u << u)) ? Level::Positive : Level::Zero});
            }
            for (std::size_t e = 0; e < edges.size(); ++e) {
              t.edges.push_back({edges[e].first, edges[e].second, slopes[e]});
            }
            for (int u = 0; u < v; ++u) {
              for (int m : legs_at[static_cast<std::size_t>(u)]) t.legs.push_back({m, u});
            }
            if (validate(t, alpha)) continue;
            if (cone_dimension(t, alpha) != 1) continue;
            ShapeInfo shape = classify_shape(t, alpha);
            insert_entry(seen, std::move(t), std::move(shape));
          }
          int pos = 0;
          while (pos < n && assign[static_cast<std::size_t>(pos)] == v - 1) {
            assign[static_cast<std::size_t>(pos)] = 0;
            ++pos;
          }
          if (pos == n) break;
          ++assign[static_cast<std::size_t>(pos)];
        }
        // Next composition of d (decrement leftmost positive, push rest).
        int pos = 0;
        while (pos < v && degrees[static_cast<std::size_t>(pos)] == 0) ++pos;
        if (pos == v - 1) break;
        const int head = degrees[static_cast<std::size_t>(pos)];
        degrees[static_cast<std::size_t>(pos)] = 0;
        degrees[0] = head - 1;
        ++degrees[static_cast<std::size_t>(pos + 1)];
      }
    }
  }

  DivisorCatalog catalog{alpha, {}, max_vertices < std::max(2, d + 1)};
  for (auto& [key, entry] : seen) catalog.types.push_back(std::move(entry));
  return catalog;
}

nlohmann::ordered_json catalog_to_json(const DivisorCatalog& catalog) {
  nlohmann::ordered_json j;
  j["alpha"] = catalog.alpha.alpha();
  j["N"] = catalog.size();
  j["types"] = nlohmann::ordered_json::array();
  for (const DivisorEntry& e : catalog.types) {
    j["types"].push_back({{"key", e.key},
                          {"shape", shape_name(e.shape.kind)},
                          {"role", e.role.to_string()},
                          {"type", type_to_json(e.type)}});
  }
  return j;
}

std::string catalog_to_csv(const DivisorCatalog& catalog) {
  std::ostringstream out;
  out << "key,shape,role\n";
  for (const DivisorEntry& e : catalog.types) {
    out << e.key << "," << shape_name(e.shape.kind) << ",\"" << e.role.to_string()
        << "\"\n";
  }
  return out.str();
}

}  // namespace tropdiv
