#include <tropdiv/rocket_calculus.hpp>

#include <tropdiv/combinatorics.hpp>

#include <set>

namespace tropdiv {

int RocketData::total_degree() const {
  int d = 0;
  for (int dj : degrees) d += dj;
  return d;
}

long RocketData::tangency_sum(int part) const {
  long sum = 0;
  for (int m : markings[static_cast<std::size_t>(part)]) {
    sum += alpha[static_cast<std::size_t>(m - 1)];
  }
  return sum;
}

bool RocketData::valid() const {
  if (k < 1 || static_cast<int>(degrees.size()) != k + 1 ||
      static_cast<int>(slopes.size()) != k ||
      static_cast<int>(markings.size()) != k + 1) {
    return false;
  }
  if (vertical_degrees.size() != alpha.size()) return false;
  for (long b : vertical_degrees) {
    if (b < 0) return false;
  }
  int alpha_total = 0;
  for (int a : alpha) {
    if (a < 0) return false;
    alpha_total += a;
  }
  if (degrees[0] < 0 || total_degree() != alpha_total) return false;
  std::set<int> seen;
  for (const auto& part : markings) {
    for (int m : part) {
      if (m < 1 || m > static_cast<int>(alpha.size()) || !seen.insert(m).second) return false;
    }
  }
  if (seen.size() != alpha.size()) return false;
  for (int j = 1; j <= k; ++j) {
    if (slopes[static_cast<std::size_t>(j - 1)] !=
            degrees[static_cast<std::size_t>(j)] - tangency_sum(j) ||
        slopes[static_cast<std::size_t>(j - 1)] <= 0) {
      return false;
    }
  }
  for (const auto& [j1, j2] : extra_nodes) {
    if (j1 < 1 || j2 < 1 || j1 > static_cast<int>(alpha.size()) ||
        j2 > static_cast<int>(alpha.size()) || j1 == j2) {
      return false;
    }
  }
  return true;
}

BlowupWeights weights(const std::vector<long>& slopes) {
  std::vector<Integer> values;
  for (long m : slopes) values.emplace_back(m);
  BlowupWeights out;
  out.w = lcm_list(values);
  Rational c0_sq = 0;
  Integer slope_sum = 0;
  for (long m : slopes) {
    const Integer wj = out.w / Integer(m);
    out.wj.push_back(wj);
    c0_sq -= make_rational(1, wj);
    slope_sum += m;
    // w * (C0.Cj) = m_j under C0.Cj = 1/w_j.
    if (Rational(out.w) * make_rational(1, wj) != Rational(Integer(m))) {
      throw std::logic_error("weights: w * C0.Cj != m_j");
    }
  }
  out.c0_squared = c0_sq;
  if (Rational(out.w) * c0_sq != -Rational(slope_sum)) {
    throw std::logic_error("weights: w * C0^2 != -(m_1 + ... + m_k)");
  }
  return out;
}

MultidegreeReport multidegree_check(const RocketData& r) {
  MultidegreeReport report;
  // Only structural sanity is required up front; the identity lines
  // below are what detect inconsistent numerical data.
  if (r.k < 1 || static_cast<int>(r.degrees.size()) != r.k + 1 ||
      static_cast<int>(r.slopes.size()) != r.k ||
      static_cast<int>(r.markings.size()) != r.k + 1) {
    report.failing_line = "malformed rocket data";
    return report;
  }
  for (const auto& part : r.markings) {
    for (int m : part) {
      if (m < 1 || m > static_cast<int>(r.alpha.size())) {
        report.failing_line = "malformed rocket data";
        return report;
      }
    }
  }
  for (const auto& [j1, j2] : r.extra_nodes) {
    if (j1 < 1 || j2 < 1 || j1 > static_cast<int>(r.alpha.size()) ||
        j2 > static_cast<int>(r.alpha.size())) {
      report.failing_line = "malformed rocket data";
      return report;
    }
  }
  const int d = r.total_degree();

  long slope_sum = 0;
  for (long m : r.slopes) slope_sum += m;

  // deg L|C0 = sum_{A0} alpha + w*C0^2 / w... symbolically:
  // sum_{A0} alpha - (m_1 + ... + m_k) = d_0.
  report.c0_ok = r.tangency_sum(0) - slope_sum == r.degrees[0];
  if (!report.c0_ok) {
    report.failing_line = "deg L|C0";
    return report;
  }

  report.cj_ok = true;
  for (int j = 1; j <= r.k; ++j) {
    if (r.tangency_sum(j) + r.slopes[static_cast<std::size_t>(j - 1)] !=
        r.degrees[static_cast<std::size_t>(j)]) {
      report.cj_ok = false;
      report.failing_line = "deg L|C" + std::to_string(j);
      return report;
    }
  }

  report.dj_ok = report.ej_ok = true;
  for (const auto& [j1, j2] : r.extra_nodes) {
    const long a1 = r.alpha[static_cast<std::size_t>(j1 - 1)];
    const long a2 = r.alpha[static_cast<std::size_t>(j2 - 1)];
    const long u = a1 + a2;  // node tangency from balancing
    // D_j carries every marking except x_{j1}, x_{j2}.
    if (d - a1 - a2 + u != d) {
      report.dj_ok = false;
      report.failing_line = "deg L|Dj";
      return report;
    }
    if (a1 + a2 - u != 0) {
      report.ej_ok = false;
      report.failing_line = "deg L|Ej";
      return report;
    }
  }
  return report;
}

Integer bp_free_bound(const RocketData& r) {
  if (!r.valid()) throw std::invalid_argument("bp_free_bound: invalid rocket data");
  const BlowupWeights bw = weights(r.slopes);
  Integer m = r.degrees[0];
  for (int j = 1; j <= r.k; ++j) {
    m += Integer(r.degrees[static_cast<std::size_t>(j)]) * bw.wj[static_cast<std::size_t>(j - 1)];
  }
  for (std::size_t i = 0; i < r.alpha.size(); ++i) {
    m -= Integer(r.alpha[i]) * Integer(r.vertical_degrees[i]);
  }
  m -= bw.w;
  return m > 0 ? m : Integer(0);
}

}  // namespace tropdiv
