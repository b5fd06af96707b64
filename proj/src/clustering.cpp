// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#include "cfmimo/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cfmimo/rng.hpp"

namespace cfm {

std::vector<int> ClusterLayout::out_users(int s) const {
  std::vector<int> out;
  out.reserve(user_pc.size());
  for (int k = 0; k < static_cast<int>(user_pc.size()); ++k) {
    if (user_pc[k] != s) out.push_back(k);
  }
  return out;
}

namespace {

// Circular mean per coordinate; falls back to the plain mean when the mean
// resultant vector degenerates.
Eigen::Vector2d toroidal_centroid(const std::vector<Eigen::Vector2d>& pts,
                                  const std::vector<int>& members,
                                  double side) {
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (int dim = 0; dim < 2; ++dim) {
    double sx = 0.0, sy = 0.0;
    for (int i : members) {
      const double th = 2.0 * M_PI * pts[i](dim) / side;
      sx += std::cos(th);
      sy += std::sin(th);
    }
    if (std::hypot(sx, sy) < 1e-9) {
      double mean = 0.0;
      for (int i : members) mean += pts[i](dim);
      c(dim) = mean / members.size();
    } else {
      double th = std::atan2(sy, sx);
      if (th < 0.0) th += 2.0 * M_PI;
      c(dim) = th * side / (2.0 * M_PI);
    }
  }
  return c;
}

}  // namespace

std::vector<std::vector<int>> form_pcs_geographic(const Scenario& scn, int S) {
  const int M = scn.num_aps();
  if (S < 1 || S > M) {
    throw std::invalid_argument("form_pcs_geographic: S outside [1, M]");
  }
  const double side = scn.area_side;
  const auto& pos = scn.ap_positions;
  std::vector<std::vector<int>> pcs;

  if (S == 1) {
    std::vector<int> all(M);
    std::iota(all.begin(), all.end(), 0);
    pcs.push_back(std::move(all));
    return pcs;
  }
  if (S == M) {
    for (int m = 0; m < M; ++m) pcs.push_back({m});
    return pcs;
  }

  // k-means++ seeding, deterministic in (scenario seed, S).
  std::mt19937_64 rng(derive_seed(scn.rng_seed, 0x6B3Au, S));
  std::vector<Eigen::Vector2d> centroids;
  {
    std::uniform_int_distribution<int> pick(0, M - 1);
    centroids.push_back(pos[pick(rng)]);
    std::vector<double> d2(M);
    while (static_cast<int>(centroids.size()) < S) {
      double total = 0.0;
      for (int m = 0; m < M; ++m) {
        double best = std::numeric_limits<double>::max();
        for (const auto& c : centroids) {
          best = std::min(best, wrap_distance(pos[m], c, side));
        }
        d2[m] = best * best;
        total += d2[m];
      }
      if (total <= 0.0) {
        centroids.push_back(pos[static_cast<int>(centroids.size()) % M]);
        continue;
      }
      std::uniform_real_distribution<double> ud(0.0, total);
      double r = ud(rng);
      int chosen = M - 1;
      for (int m = 0; m < M; ++m) {
        r -= d2[m];
        if (r <= 0.0) {
          chosen = m;
          break;
        }
      }
      centroids.push_back(pos[chosen]);
    }
  }

  std::vector<int> assign(M, -1);
  for (int iter = 0; iter < 200; ++iter) {
    bool changed = false;
    for (int m = 0; m < M; ++m) {
      int best = 0;
      double bestd = std::numeric_limits<double>::max();
      for (int s = 0; s < S; ++s) {
        const double d = wrap_distance(pos[m], centroids[s], side);
        if (d < bestd - 1e-12) {
          bestd = d;
          best = s;
        }
      }
      if (assign[m] != best) {
        assign[m] = best;
        changed = true;
      }
    }
    // Repair empty clusters with the AP farthest from its own centroid.
    for (int s = 0; s < S; ++s) {
      if (std::count(assign.begin(), assign.end(), s) > 0) continue;
      int far_ap = -1;
      double far_d = -1.0;
      for (int m = 0; m < M; ++m) {
        if (std::count(assign.begin(), assign.end(), assign[m]) <= 1) continue;
        const double d = wrap_distance(pos[m], centroids[assign[m]], side);
        if (d > far_d) {
          far_d = d;
          far_ap = m;
        }
      }
      if (far_ap >= 0) {
        assign[far_ap] = s;
        changed = true;
      }
    }
    std::vector<std::vector<int>> groups(S);
    for (int m = 0; m < M; ++m) groups[assign[m]].push_back(m);
    for (int s = 0; s < S; ++s) {
      if (!groups[s].empty()) {
        centroids[s] = toroidal_centroid(pos, groups[s], side);
      }
    }
    if (!changed) break;
  }

  std::vector<std::vector<int>> groups(S);
  for (int m = 0; m < M; ++m) groups[assign[m]].push_back(m);

  // Rebalance: the largest cluster donates its farthest AP to the nearest
  // smaller cluster until sizes differ by at most one.
  for (int guard = 0; guard < M * M; ++guard) {
    int largest = 0, smallest = 0;
    for (int s = 0; s < S; ++s) {
      if (groups[s].size() > groups[largest].size()) largest = s;
      if (groups[s].size() < groups[smallest].size()) smallest = s;
    }
    if (groups[largest].size() - groups[smallest].size() <= 1) break;
    const auto donor_centroid = toroidal_centroid(pos, groups[largest], side);
    int donor_ap = groups[largest][0];
    double far_d = -1.0;
    for (int m : groups[largest]) {
      const double d = wrap_distance(pos[m], donor_centroid, side);
      if (d > far_d) {
        far_d = d;
        donor_ap = m;
      }
    }
    int target = -1;
    double near_d = std::numeric_limits<double>::max();
    for (int s = 0; s < S; ++s) {
      if (groups[s].size() + 1 >= groups[largest].size()) continue;
      const auto c = toroidal_centroid(pos, groups[s], side);
      const double d = wrap_distance(pos[donor_ap], c, side);
      if (d < near_d) {
        near_d = d;
        target = s;
      }
    }
    if (target < 0) break;
    groups[largest].erase(
        std::find(groups[largest].begin(), groups[largest].end(), donor_ap));
    groups[target].push_back(donor_ap);
  }

  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

ClusterLayout assign_users_to_pcs(const Scenario& scn,
                                  std::vector<std::vector<int>> pcs) {
  const int K = scn.num_users();
  const int S = static_cast<int>(pcs.size());
  ClusterLayout layout;
  layout.S = S;
  layout.pc_members = std::move(pcs);
  layout.user_pc.assign(K, 0);
  layout.served_users.assign(S, {});
  layout.t.assign(K, 1);
  for (int k = 0; k < K; ++k) {
    int best = 0;
    double best_gain = -1.0;
    for (int s = 0; s < S; ++s) {
      double gain = 0.0;
      for (int m : layout.pc_members[s]) gain += scn.beta(m, k);
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    layout.user_pc[k] = best;
    layout.served_users[best].push_back(k);
  }
  return layout;
}

int compute_k_max(const FronthaulConfig& cfg, int L) {
  if (cfg.fh_max <= 0.0 || L < 1 || cfg.m_mo < 2 ||
      (cfg.m_mo & (cfg.m_mo - 1)) != 0 || cfg.eps_cp <= 0.0 ||
      cfg.eps_cp > 1.0 || cfg.delta_da <= 0.0 || cfg.delta_pr <= 0.0 ||
      cfg.n_sub < 1 || cfg.n_o < 1 || cfg.n_bits < 1 || cfg.n_gran < 1) {
    throw std::invalid_argument("compute_k_max: invalid fronthaul parameters");
  }
  const double per_user =
      cfg.alpha1() * std::log2(static_cast<double>(cfg.m_mo)) + cfg.alpha2(L);
  const int k = static_cast<int>(std::floor(cfg.fh_max / per_user));
  if (k < 1) {
    throw std::runtime_error(
        "compute_k_max: fronthaul budget below the cost of one user");
  }
  return k;
}

double fronthaul_load(const FronthaulConfig& cfg, int L, int users_served) {
  return users_served * (cfg.alpha1() * std::log2(static_cast<double>(
                                            cfg.m_mo)) +
                         cfg.alpha2(L));
}

ClusterLayout make_layout(const Scenario& scn, int S,
                          const FronthaulConfig& cfg) {
  ClusterLayout layout = assign_users_to_pcs(scn, form_pcs_geographic(scn, S));
  layout.k_max = compute_k_max(cfg, scn.antennas_per_ap);
  return layout;
}

}  // namespace cfm
