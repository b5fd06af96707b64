// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace cfm {

/// Three-slope path loss with a COST-231 Hata fixed term. Distances in
/// meters internally, the slope formulas use kilometers.
struct PathLossModel {
  double d0_m = 10.0;
  double d1_m = 50.0;
  double carrier_mhz = 1900.0;
  double ap_height_m = 15.0;
  double user_height_m = 1.65;

  /// Fixed-term L of the model, in dB.
  double fixed_loss_db() const;
  /// Path loss in dB (negative gain) at distance d_m; constant below d0,
  /// 20 dB/decade between d0 and d1, 35 dB/decade beyond d1.
  double path_loss_db(double d_m) const;
};

/// Slow-timescale network state: geometry on a wrap-around square plus the
/// large-scale fading matrix. Immutable after construction and safe to share
/// read-only across workers.
struct Scenario {
  double area_side = 1000.0;
  std::vector<Eigen::Vector2d> ap_positions;
  std::vector<Eigen::Vector2d> user_positions;
  int antennas_per_ap = 1;
  Eigen::MatrixXd beta;  // M x K, linear scale
  double shadow_sigma_db = 4.0;
  std::uint64_t rng_seed = 0;
  PathLossModel path_loss;

  int num_aps() const { return static_cast<int>(ap_positions.size()); }
  int num_users() const { return static_cast<int>(user_positions.size()); }
};

/// Toroidal Euclidean distance on the wrap-around square.
double wrap_distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                     double area_side);

/// Linear large-scale coefficient: 10^((pl_db + sigma*y)/10).
double large_scale_fading(double pl_db, double shadow_draw,
                          double shadow_sigma_db);

/// Builds a scenario from given positions: wrap distance -> three-slope path
/// loss -> lognormal shadowing beyond d1. Shadow draws are keyed on the
/// (AP, user) position pair so relabeling users permutes beta columns.
Scenario make_scenario(std::vector<Eigen::Vector2d> ap_positions,
                       std::vector<Eigen::Vector2d> user_positions, int L,
                       double area_side, std::uint64_t seed,
                       const PathLossModel& model = {},
                       double shadow_sigma_db = 4.0);

/// Draws uniform i.i.d. positions and builds the scenario.
Scenario generate_scenario(int M, int K, int L, double area_side,
                           std::uint64_t seed,
                           const PathLossModel& model = {},
                           double shadow_sigma_db = 4.0);

void save_scenario(const Scenario& scn, const std::string& path);
Scenario load_scenario(const std::string& path);

}  // namespace cfm
