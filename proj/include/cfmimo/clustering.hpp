// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#pragma once

#include <vector>

#include "cfmimo/scenario.hpp"

namespace cfm {

/// Partition of APs into processing clusters plus the user assignment.
/// t[k] = 1 encodes the cluster-wise scheduling assumption for out-of-cluster
/// users. Immutable after construction.
struct ClusterLayout {
  int S = 0;
  std::vector<std::vector<int>> pc_members;   // C_s, ascending AP indices
  std::vector<int> user_pc;                   // length K
  std::vector<std::vector<int>> served_users; // U_s, ascending user indices
  std::vector<int> t;                         // length K, all ones
  int k_max = 0;                              // per-AP fronthaul budget

  int num_users() const { return static_cast<int>(user_pc.size()); }
  /// Users not served by PC s, ascending.
  std::vector<int> out_users(int s) const;
};

/// eCPRI fronthaul parameters; defaults follow the reference configuration
/// (100 MHz, 30 kHz subcarrier spacing).
struct FronthaulConfig {
  double fh_max = 10e9;  // bits/second
  int m_mo = 32;         // modulation cardinality, power of two
  int n_sub = 3264;
  int n_o = 14;
  int n_bits = 16;
  int n_gran = 136;
  double eps_cp = 0.85;
  double delta_da = 5e-4;  // seconds
  double delta_pr = 2e-4;  // seconds

  double alpha1() const {
    return static_cast<double>(n_sub) * n_o / (eps_cp * delta_da);
  }
  double alpha2(int L) const {
    return 2.0 * L * n_bits * n_gran / (eps_cp * delta_pr);
  }
};

/// Groups APs into S clusters by toroidal k-means with equal-size
/// rebalancing (sizes differ by at most one). S=1 gives the network-wide PC,
/// S=M gives singletons.
std::vector<std::vector<int>> form_pcs_geographic(const Scenario& scn, int S);

/// Assigns each user to the PC with the highest sum large-scale gain,
/// ties broken by lowest PC index. k_max is left at 0.
ClusterLayout assign_users_to_pcs(const Scenario& scn,
                                  std::vector<std::vector<int>> pcs);

/// floor(FH_max / (alpha1 log2(M_mo) + alpha2)); throws when the budget
/// cannot carry a single user.
int compute_k_max(const FronthaulConfig& cfg, int L);

/// Total per-AP fronthaul consumption (data + precoding weights) in bits/s.
double fronthaul_load(const FronthaulConfig& cfg, int L, int users_served);

/// form_pcs_geographic + assign_users_to_pcs + compute_k_max in one step.
ClusterLayout make_layout(const Scenario& scn, int S,
                          const FronthaulConfig& cfg);

}  // namespace cfm
