#include <tropdiv/class_group.hpp>

#include <tropdiv/linalg.hpp>

#include <set>

namespace tropdiv {

const char* convention_name(PullbackConvention c) {
  switch (c) {
    case PullbackConvention::SetTheoretic: return "set-theoretic";
  }
  return "?";
}

namespace {

// Masks (representative side, containing marking 1) of the partitions
// cut out by the edges of the stabilization of a type.
std::set<unsigned> stable_partition_masks(const CombinatorialType& t, int n) {
  std::set<unsigned> out;
  const StableDualGraph stable = stabilize(t);
  const unsigned full = (1u << n) - 1;
  for (const std::vector<int>& side : stable.edge_partitions()) {
    unsigned mask = 0;
    for (int m : side) mask |= 1u << (m - 1);
    if (!(mask & 1u)) mask = full & ~mask;
    out.insert(mask);
  }
  return out;
}

}  // namespace

RationalVector pullback_divisor(const CurveBoundaryDivisor& s,
                                const DivisorCatalog& catalog) {
  const int n = catalog.alpha.length();
  RationalVector v = RationalVector::Zero(catalog.size());
  for (Eigen::Index i = 0; i < catalog.size(); ++i) {
    const auto masks = stable_partition_masks(catalog.types[static_cast<std::size_t>(i)].type, n);
    if (masks.count(s.mask)) v(i) = 1;
  }
  return v;
}

RationalMatrix relation_matrix(const DivisorCatalog& catalog, bool basis_only) {
  const int n = catalog.alpha.length();
  if (n == 3) return RationalMatrix::Zero(0, catalog.size());

  std::vector<WdvvRelation> relations;
  if (basis_only) {
    for (const PivotedRelation& p : appendix_basis(n)) relations.push_back(p.relation);
  } else {
    relations = all_wdvv_relations(n);
  }

  const auto divisors = boundary_divisors(n);
  // Stabilize each catalog type once; record which boundary divisors of
  // M-bar_{0,n} its pullback hits.
  std::vector<std::vector<Eigen::Index>> hits(static_cast<std::size_t>(catalog.size()));
  {
    std::vector<unsigned> divisor_masks;
    for (const CurveBoundaryDivisor& div : divisors) divisor_masks.push_back(div.mask);
    for (Eigen::Index i = 0; i < catalog.size(); ++i) {
      const auto masks =
          stable_partition_masks(catalog.types[static_cast<std::size_t>(i)].type, n);
      for (std::size_t s = 0; s < divisor_masks.size(); ++s) {
        if (masks.count(divisor_masks[s])) {
          hits[static_cast<std::size_t>(i)].push_back(static_cast<Eigen::Index>(s));
        }
      }
    }
  }

  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(relations.size()),
                                          catalog.size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (Eigen::Index i = 0; i < catalog.size(); ++i) {
      Rational coeff = 0;
      for (Eigen::Index s : hits[static_cast<std::size_t>(i)]) {
        coeff += relations[r].coeffs(s);
      }
      m(static_cast<Eigen::Index>(r), i) = coeff;
    }
  }
  return m;
}

bool basis_size_identity(const DivisorCatalog& catalog) {
  const int n = catalog.alpha.length();
  const int terrestrials = catalog.count_role(Role::Terrestrial);
  const int expected = catalog.size() - (n - 1) * (n - 2) / 2 + 1;
  return terrestrials + 1 + n == expected;
}

ClassGroupReport class_group_report(const DivisorCatalog& catalog) {
  const int n = catalog.alpha.length();
  ClassGroupReport report;
  report.alpha = catalog.alpha.alpha();
  report.N = catalog.size();
  report.convention = PullbackConvention::SetTheoretic;

  const RationalMatrix relations = relation_matrix(catalog, /*basis_only=*/true);
  report.relation_rank = rank(relations);
  report.dimension = report.N - report.relation_rank;

  report.checks["relation_rank_formula"] =
      report.relation_rank == (n - 1) * (n - 2) / 2 - 1;
  report.checks["dimension_formula"] =
      report.dimension == report.N - (n - 1) * (n - 2) / 2 + 1;
  report.checks["basis_size_identity"] = basis_size_identity(catalog);

  // Proposition-level shadow: airborne coordinate vanishes in every row.
  Eigen::Index airborne_idx = -1;
  for (Eigen::Index i = 0; i < catalog.size(); ++i) {
    if (catalog.types[static_cast<std::size_t>(i)].role.kind == Role::Airborne) {
      airborne_idx = i;
    }
  }
  bool airborne_zero = airborne_idx >= 0;
  for (Eigen::Index r = 0; r < relations.rows() && airborne_zero; ++r) {
    airborne_zero = relations(r, airborne_idx) == 0;
  }
  report.checks["airborne_zero"] = airborne_zero;

  // Each pullback of E_{ij} is a unit on the alien D_{ij} and vanishes
  // on every other alien. For n = 4 the divisor E_{ij} coincides with
  // E_{kl} for the complementary pair, so that alien is a unit as well.
  bool alien_unit = true;
  if (n >= 4) {
    for (int i = 1; i <= n && alien_unit; ++i) {
      for (int j = i + 1; j <= n && alien_unit; ++j) {
        const RationalVector pb =
            pullback_divisor(CurveBoundaryDivisor::from_subset(n, {i, j}), catalog);
        for (Eigen::Index c = 0; c < catalog.size(); ++c) {
          const DivisorEntry& entry = catalog.types[static_cast<std::size_t>(c)];
          if (entry.role.kind != Role::Alien) continue;
          bool hit = entry.role.i == i && entry.role.j == j;
          if (n == 4 && entry.role.i != i && entry.role.j != j &&
              entry.role.i != j && entry.role.j != i) {
            hit = true;  // complementary pair
          }
          if (pb(c) != (hit ? 1 : 0)) {
            alien_unit = false;
            break;
          }
        }
      }
    }
  }
  report.checks["alien_unit"] = alien_unit;

  // Candidate basis: airborne, all terrestrials, and the aliens
  // D_12, ..., D_1n, D_23.
  std::set<std::string> candidate;
  for (const DivisorEntry& entry : catalog.types) {
    if (entry.role.kind == Role::Airborne || entry.role.kind == Role::Terrestrial) {
      candidate.insert(entry.key);
    }
    if (entry.role.kind == Role::Alien &&
        (entry.role.i == 1 || (entry.role.i == 2 && entry.role.j == 3))) {
      candidate.insert(entry.key);
    }
  }
  for (Eigen::Index i = 0; i < catalog.size(); ++i) {
    const DivisorEntry& entry = catalog.types[static_cast<std::size_t>(i)];
    if (candidate.count(entry.key)) report.basis.push_back(entry.key);
  }

  // Basis certification: the relations plus the indicator rows of the
  // candidate must exhaust Q^N, and the sizes must be exact.
  RationalMatrix indicators = RationalMatrix::Zero(
      static_cast<Eigen::Index>(report.basis.size()), catalog.size());
  {
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < catalog.size(); ++i) {
      if (candidate.count(catalog.types[static_cast<std::size_t>(i)].key)) {
        indicators(row++, i) = 1;
      }
    }
  }
  const bool sizes_match =
      report.relation_rank + static_cast<Eigen::Index>(report.basis.size()) == report.N;
  const bool stacked_full = rank(vstack(relations, indicators)) == report.N;
  report.checks["basis_certifies"] = sizes_match && stacked_full;

  return report;
}

ClassGroupReport class_group_report(const TangencyProfile& alpha) {
  return class_group_report(enumerate_divisor_types(alpha));
}

bool ClassGroupReport::all_checks_pass() const {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

nlohmann::ordered_json report_to_json(const ClassGroupReport& report) {
  nlohmann::ordered_json j;
  j["alpha"] = report.alpha;
  j["N"] = report.N;
  j["relation_rank"] = static_cast<long>(report.relation_rank);
  j["dimension"] = static_cast<long>(report.dimension);
  j["basis"] = report.basis;
  j["convention"] = convention_name(report.convention);
  j["checks"] = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : report.checks) j["checks"][name] = ok;
  return j;
}

}  // namespace tropdiv
