#pragma once

#include <tropdiv/enumeration.hpp>
#include <tropdiv/stable_curves.hpp>

#include <json.hpp>

#include <map>
#include <string>

namespace tropdiv {

/// Pullback coefficient convention. Only the set-theoretic convention
/// (coefficient 1 per contributing divisor) is implemented; the field
/// exists so reports name it.
enum class PullbackConvention { SetTheoretic };

const char* convention_name(PullbackConvention c);

/// Pullback of the boundary divisor D_S of M-bar_{0,n}: coefficient 1
/// on every catalog type whose stabilization has an edge cutting out
/// the partition {S, S^c}. Coordinates follow catalog order.
RationalVector pullback_divisor(const CurveBoundaryDivisor& s,
                                const DivisorCatalog& catalog);

/// Rows = pulled-back WDVV relations (the independent table when
/// basis_only, otherwise all 2*C(n,4)), columns = catalog types.
/// Empty (0-row) for n = 3.
RationalMatrix relation_matrix(const DivisorCatalog& catalog, bool basis_only);

struct ClassGroupReport {
  std::vector<int> alpha;
  int N = 0;
  Eigen::Index relation_rank = 0;
  Eigen::Index dimension = 0;
  std::vector<std::string> basis;  // canonical keys of the certified basis
  PullbackConvention convention = PullbackConvention::SetTheoretic;
  std::map<std::string, bool> checks;

  bool all_checks_pass() const;
};

/// Dimension N(alpha) - rank of the pulled-back relations, with the
/// dimension formula and the explicit basis
/// {airborne} + terrestrials + {D_12, ..., D_1n, D_23} certified by
/// exact stacked-rank tests.
ClassGroupReport class_group_report(const DivisorCatalog& catalog);
ClassGroupReport class_group_report(const TangencyProfile& alpha);

/// Role-count identity: #terrestrial + 1 + n = N(alpha) - C(n-1,2) + 1.
bool basis_size_identity(const DivisorCatalog& catalog);

nlohmann::ordered_json report_to_json(const ClassGroupReport& report);

}  // namespace tropdiv
