#include "qmatroid/identities.hpp"

namespace qmatroid {

IdentityReport make_identity_report(std::string identity, std::string matroid,
                                    int degree_bound,
                                    const std::vector<long>& points,
                                    const std::function<Rat(long)>& lhs_at,
                                    const std::function<Rat(long)>& rhs_at) {
  IdentityReport report;
  report.identity = std::move(identity);
  report.matroid = std::move(matroid);
  report.degree_bound = degree_bound;
  bool all_agree = true;
  for (long q : points) {
    PointComparison pc{q, lhs_at(q), rhs_at(q)};
    all_agree = all_agree && pc.agrees();
    report.points.push_back(std::move(pc));
  }
  report.verdict =
      all_agree && static_cast<int>(report.points.size()) > degree_bound;
  return report;
}

std::vector<long> default_check_points(int ground_size) {
  std::vector<long> points;
  for (long q = 2; q <= ground_size + 2; ++q) points.push_back(q);
  return points;
}

}  // namespace qmatroid
