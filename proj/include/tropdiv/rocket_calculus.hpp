#pragma once

#include <tropdiv/rational.hpp>
#include <tropdiv/tropical.hpp>

#include <string>
#include <vector>

namespace tropdiv {

/// Numerical bookkeeping of the test-curve construction over a rocket
/// divisor: degrees and marking partition of the central fibre, slopes,
/// off-central node pairs, and the vertical degrees of the marking
/// sections. No surface geometry is modelled; intersection numbers are
/// symbolic rationals.
struct RocketData {
  std::vector<int> alpha;                  // tangency profile
  int k = 0;
  std::vector<int> degrees;                // d_0, ..., d_k
  std::vector<long> slopes;                // m_1, ..., m_k, each positive
  std::vector<std::vector<int>> markings;  // A_0, ..., A_k
  std::vector<std::pair<int, int>> extra_nodes;  // marking pairs (j1, j2)
  std::vector<long> vertical_degrees;      // b_1, ..., b_n, non-negative

  int total_degree() const;
  long tangency_sum(int part) const;  // sum of alpha over A_part

  /// m_j = d_j - sum_{A_j} alpha > 0, degrees sum to d, b_i >= 0.
  bool valid() const;
};

struct BlowupWeights {
  Integer w;                  // lcm(m_1, ..., m_k)
  std::vector<Integer> wj;    // w / m_j
  Rational c0_squared;        // -(1/w_1 + ... + 1/w_k)
};

/// w = lcm(m_1..m_k), w_j = w/m_j; asserts w * (C0.Cj) = m_j under
/// C0.Cj = 1/w_j and w * C0^2 = -(m_1 + ... + m_k).
BlowupWeights weights(const std::vector<long>& slopes);

struct MultidegreeReport {
  bool c0_ok = false;      // deg L|C0 = sum_{A0} alpha - sum m_j = d_0
  bool cj_ok = false;      // deg L|Cj = sum_{Aj} alpha + m_j = d_j for all j
  bool dj_ok = false;      // deg L|Dj = sum_{Dj} alpha + u_j = d per node
  bool ej_ok = false;      // deg L|Ej = alpha_{j1} + alpha_{j2} - u_j = 0
  std::string failing_line;

  bool all_ok() const { return c0_ok && cj_ok && dj_ok && ej_ok; }
};

MultidegreeReport multidegree_check(const RocketData& r);

/// Lower bound max(M, 0) with M = d_0 + sum d_j w_j - sum alpha_i b_i - w.
Integer bp_free_bound(const RocketData& r);

}  // namespace tropdiv
