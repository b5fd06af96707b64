// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "cfmimo/scenario.hpp"

namespace cfm {

/// Uplink training configuration. rho_u is the pilot SNR (pilot power over
/// noise power, dimensionless); orthogonal pilots require tau_u >= K.
struct PilotConfig {
  double tau_u = 2000.0;
  double rho_u = 1.0;
};

/// One small-scale realization: true channels, MMSE estimates and the
/// per-element estimate variances. Vectors indexed m * K + k.
struct ChannelSet {
  int M = 0;
  int K = 0;
  int L = 0;
  std::vector<Eigen::VectorXcd> g;
  std::vector<Eigen::VectorXcd> g_hat;
  Eigen::MatrixXd gamma;

  const Eigen::VectorXcd& true_channel(int m, int k) const {
    return g[static_cast<std::size_t>(m) * K + k];
  }
  const Eigen::VectorXcd& estimate(int m, int k) const {
    return g_hat[static_cast<std::size_t>(m) * K + k];
  }
};

/// i.i.d. Rayleigh small-scale fading scaled by sqrt(beta).
std::vector<Eigen::VectorXcd> draw_channels(const Scenario& scn,
                                            std::uint64_t seed);

/// Per-element MMSE estimate variance tau*rho*beta^2 / (tau*rho*beta + 1).
double gamma_of(double beta, double tau_u, double rho_u);

/// Synthesizes MMSE estimates with the closed-form statistics: g_hat has
/// i.i.d. CN(0, gamma) elements and g - g_hat is uncorrelated with g_hat.
ChannelSet mmse_estimate(std::vector<Eigen::VectorXcd> g,
                         const PilotConfig& pilot, const Scenario& scn,
                         std::uint64_t seed);

/// Draws true channels and estimates from seed-derived streams.
ChannelSet draw_channel_set(const Scenario& scn, const PilotConfig& pilot,
                            std::uint64_t seed);

}  // namespace cfm
