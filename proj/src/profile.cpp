#include "edgecol/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgecol {

namespace {

double pw(int n, double e) { return std::pow(static_cast<double>(n), e); }

int ceil_int(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

}  // namespace

int ConstantsProfile::case1_threshold(int n) const { return std::max(1, ceil_int(case1_scale * pw(n, case1_exp))); }

int ConstantsProfile::s_threshold(int n) const {
  if (s_from_case1) return case1_threshold(n);
  return std::max(1, ceil_int(s_mult * pw(n, s_exp)));
}

int ConstantsProfile::side_slack(int n) const { return ceil_int(side_slack_mult * pw(n, side_slack_exp)); }

int ConstantsProfile::good_cap(int n) const {
  return std::max(good_cap_min, ceil_int(good_cap_mult * pw(n, good_cap_exp)));
}

long long ConstantsProfile::residual_cap(int n) const {
  return static_cast<long long>(std::ceil(residual_cap_mult * pw(n, residual_cap_exp)));
}

int ConstantsProfile::ell(int n) const {
  if (ell_override) return *ell_override;
  return ceil_int(ell_mult * pw(n, ell_exp));
}

int ConstantsProfile::partition_bound(int n, int max_degree) const {
  const int paper_bound = static_cast<int>(std::floor(pw(n, 2.0 / 3.0) + 1e-9)) - 1;
  if (!partition_relaxed) return paper_bound;
  const double spread = std::sqrt(std::max(1, max_degree) * std::log(2.0 * std::max(1, n)));
  return std::max(paper_bound, 3 * ceil_int(spread));
}

int ConstantsProfile::case2_matching_cap(int n, int min_degree) const {
  if (!case2_adaptive_cap) return std::max(1, static_cast<int>(std::floor(epsilon * n / 5.0)));
  // Largest t for which the remainder after t-1 three-vertex paths still
  // meets the Hamiltonian-connectedness degree bound.
  return std::max(1, (2 * min_degree - 2 * n - 1) / 3 + 1);
}

ConstantsProfile ConstantsProfile::paper() {
  ConstantsProfile p;
  p.name = "paper";
  return p;
}

ConstantsProfile ConstantsProfile::desk() {
  ConstantsProfile p;
  p.name = "desk";
  p.s_from_case1 = true;
  p.side_slack_mult = 0.5;
  p.good_cap_mult = 1.0;
  p.good_cap_exp = 0.5;
  p.good_cap_min = 3;
  p.adaptive_ell = true;
  p.case1_scale = 0.5;
  p.partition_relaxed = true;
  p.partition_always_polish = true;
  p.case2_adaptive_cap = true;
  p.max_attempts = 8;
  p.finish_rounds = 12;
  p.strict_bounds = false;
  p.prefer_direct_paths = true;
  p.general_path_fallback = true;
  return p;
}

ConstantsProfile ConstantsProfile::named(const std::string& name) {
  if (name == "paper") return paper();
  if (name == "desk") return desk();
  throw std::invalid_argument("unknown profile '" + name + "'");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined input
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace edgecol
