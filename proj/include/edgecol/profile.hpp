#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace edgecol {

// Thresholds used by the partition, the dense-coloring pipeline and the
// reduction driver, as functions of n (half the order). "paper" keeps the
// asymptotic constants literally; "desk" rescales them so that graphs with
// a few dozen vertices are workable.
struct ConstantsProfile {
  std::string name = "desk";
  double epsilon = 0.2;

  // Vertices with max_degree - d(v) >= s_threshold form S.
  double s_mult = 7.0;
  double s_exp = 2.0 / 3.0;
  bool s_from_case1 = false;  // use case1_threshold for S instead

  // S_A = {u in S on side A : d_{G*_A}(u) <= k - side_slack}.
  double side_slack_mult = 2.0;
  double side_slack_exp = 2.0 / 3.0;

  // Side edges may be uncolored only while both ends have residual degree < good_cap.
  double good_cap_mult = 1.0;
  double good_cap_exp = 5.0 / 6.0;
  int good_cap_min = 0;

  // Reported only: bound on residual edges per side.
  double residual_cap_mult = 12.0;
  double residual_cap_exp = 5.0 / 3.0;

  // Extra palette for the residual side multigraphs; nullopt means
  // ceil(ell_mult * n^ell_exp) when !adaptive_ell.
  double ell_mult = 2.0;
  double ell_exp = 5.0 / 6.0;
  bool adaptive_ell = false;
  std::optional<int> ell_override;

  // Case selection threshold n^{6/7} (scaled by case1_scale).
  double case1_exp = 6.0 / 7.0;
  double case1_scale = 1.0;

  // |d_A(v) - d_B(v)| bound: floor(n^{2/3}) - 1, relaxed in desk.
  bool partition_relaxed = false;
  int partition_retries = 64;
  bool partition_always_polish = false;

  // Case 2 matchings hold at most this many edges; 0 means adaptive.
  bool case2_adaptive_cap = false;

  int max_attempts = 1;       // pipeline reruns with fresh partition seeds
  int finish_rounds = 1;      // reruns of steps 2-4 per partition in shuffled order
  bool strict_bounds = true;  // violated step bounds are failures, not diagnostics
  bool prefer_direct_paths = false;
  bool general_path_fallback = false;

  int s_threshold(int n) const;
  int side_slack(int n) const;
  int good_cap(int n) const;
  long long residual_cap(int n) const;
  int ell(int n) const;
  int case1_threshold(int n) const;
  int partition_bound(int n, int max_degree) const;
  int case2_matching_cap(int n, int min_degree) const;

  static ConstantsProfile paper();
  static ConstantsProfile desk();
  // "paper" or "desk"; throws std::invalid_argument otherwise.
  static ConstantsProfile named(const std::string& name);
};

// Deterministic 64-bit seed for the index-th retry derived from base.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace edgecol
