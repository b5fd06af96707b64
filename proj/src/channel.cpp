// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#include "cfmimo/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "cfmimo/rng.hpp"

namespace cfm {

std::vector<Eigen::VectorXcd> draw_channels(const Scenario& scn,
                                            std::uint64_t seed) {
  const int M = scn.num_aps();
  const int K = scn.num_users();
  const int L = scn.antennas_per_ap;
  std::mt19937_64 rng(derive_seed(seed, 0xC4A1u));
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<Eigen::VectorXcd> g(static_cast<std::size_t>(M) * K);
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k) {
      const double amp = std::sqrt(scn.beta(m, k));
      Eigen::VectorXcd v(L);
      for (int l = 0; l < L; ++l) v(l) = amp * draw_cn(rng, nd);
      g[static_cast<std::size_t>(m) * K + k] = std::move(v);
    }
  }
  return g;
}

double gamma_of(double beta, double tau_u, double rho_u) {
  if (beta <= 0.0) return 0.0;
  const double x = tau_u * rho_u * beta;
  return x * beta / (x + 1.0);
}

ChannelSet mmse_estimate(std::vector<Eigen::VectorXcd> g,
                         const PilotConfig& pilot, const Scenario& scn,
                         std::uint64_t seed) {
  const int M = scn.num_aps();
  const int K = scn.num_users();
  const int L = scn.antennas_per_ap;
  if (pilot.tau_u < K) {
    throw std::invalid_argument(
        "mmse_estimate: tau_u < K breaks pilot orthogonality");
  }
  if (pilot.rho_u <= 0.0) {
    throw std::invalid_argument("mmse_estimate: rho_u must be positive");
  }
  ChannelSet cs;
  cs.M = M;
  cs.K = K;
  cs.L = L;
  cs.g = std::move(g);
  cs.g_hat.resize(static_cast<std::size_t>(M) * K);
  cs.gamma.resize(M, K);
  std::mt19937_64 rng(derive_seed(seed, 0xE57Au));
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k) {
      const double beta = scn.beta(m, k);
      const double gam = gamma_of(beta, pilot.tau_u, pilot.rho_u);
      cs.gamma(m, k) = gam;
      const std::size_t idx = static_cast<std::size_t>(m) * K + k;
      if (beta <= 0.0) {
        cs.g_hat[idx] = Eigen::VectorXcd::Zero(L);
        continue;
      }
      // g_hat = (gamma/beta) g + w with w ~ CN(0, gamma/(tau rho beta + 1)):
      // variance gamma, orthogonal to the estimation error.
      const double scale = gam / beta;
      const double noise_var = gam / (pilot.tau_u * pilot.rho_u * beta + 1.0);
      const double noise_amp = std::sqrt(noise_var);
      Eigen::VectorXcd v(L);
      for (int l = 0; l < L; ++l) {
        v(l) = scale * cs.g[idx](l) + noise_amp * draw_cn(rng, nd);
      }
      cs.g_hat[idx] = std::move(v);
    }
  }
  return cs;
}

ChannelSet draw_channel_set(const Scenario& scn, const PilotConfig& pilot,
                            std::uint64_t seed) {
  auto g = draw_channels(scn, derive_seed(seed, 1u));
  return mmse_estimate(std::move(g), pilot, scn, derive_seed(seed, 2u));
}

}  // namespace cfm
