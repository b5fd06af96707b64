// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#include "cfmimo/scenario.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "cfmimo/rng.hpp"
#include "json.hpp"

namespace cfm {

double PathLossModel::fixed_loss_db() const {
  const double lf = std::log10(carrier_mhz);
  return 46.3 + 33.9 * lf - 13.82 * std::log10(ap_height_m) -
         (1.1 * lf - 0.7) * user_height_m + (1.56 * lf - 0.8);
}

double PathLossModel::path_loss_db(double d_m) const {
  const double L = fixed_loss_db();
  const double d0_km = d0_m / 1000.0;
  const double d1_km = d1_m / 1000.0;
  if (d_m <= d0_m) {
    return -L - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d0_km);
  }
  const double d_km = d_m / 1000.0;
  if (d_m <= d1_m) {
    return -L - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d_km);
  }
  return -L - 35.0 * std::log10(d_km);
}

double wrap_distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                     double area_side) {
  double dx = std::abs(a.x() - b.x());
  double dy = std::abs(a.y() - b.y());
  dx = std::min(dx, area_side - dx);
  dy = std::min(dy, area_side - dy);
  return std::hypot(dx, dy);
}

double large_scale_fading(double pl_db, double shadow_draw,
                          double shadow_sigma_db) {
  return std::pow(10.0, (pl_db + shadow_sigma_db * shadow_draw) / 10.0);
}

Scenario make_scenario(std::vector<Eigen::Vector2d> ap_positions,
                       std::vector<Eigen::Vector2d> user_positions, int L,
                       double area_side, std::uint64_t seed,
                       const PathLossModel& model, double shadow_sigma_db) {
  if (L < 1 || area_side <= 0.0) {
    throw std::invalid_argument("make_scenario: non-positive dimensions");
  }
  Scenario scn;
  scn.area_side = area_side;
  scn.ap_positions = std::move(ap_positions);
  scn.user_positions = std::move(user_positions);
  scn.antennas_per_ap = L;
  scn.shadow_sigma_db = shadow_sigma_db;
  scn.rng_seed = seed;
  scn.path_loss = model;

  const int M = scn.num_aps();
  const int K = scn.num_users();
  scn.beta.resize(M, K);
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k) {
      const auto& ap = scn.ap_positions[m];
      const auto& ue = scn.user_positions[k];
      const double d = wrap_distance(ap, ue, area_side);
      const double pl_db = model.path_loss_db(d);
      // Shadow draw keyed on the position pair: permuting the user list
      // permutes beta columns bit-exactly.
      std::mt19937_64 rng(derive_seed(seed, 0x5AD0u, bits_of(ap.x()),
                                      bits_of(ap.y()), bits_of(ue.x()),
                                      bits_of(ue.y())));
      std::normal_distribution<double> nd(0.0, 1.0);
      const double y = nd(rng);
      const bool shadowed = d > model.d1_m;
      scn.beta(m, k) =
          large_scale_fading(pl_db, shadowed ? y : 0.0, shadow_sigma_db);
    }
  }
  return scn;
}

Scenario generate_scenario(int M, int K, int L, double area_side,
                           std::uint64_t seed, const PathLossModel& model,
                           double shadow_sigma_db) {
  if (M < 1 || K < 1 || L < 1 || area_side <= 0.0) {
    throw std::invalid_argument("generate_scenario: non-positive dimensions");
  }
  std::mt19937_64 rng(derive_seed(seed, 0xA903u));
  std::uniform_real_distribution<double> ud(0.0, area_side);
  std::vector<Eigen::Vector2d> aps(M), users(K);
  for (auto& p : aps) {
    const double x = ud(rng);
    const double y = ud(rng);
    p = {x, y};
  }
  for (auto& p : users) {
    const double x = ud(rng);
    const double y = ud(rng);
    p = {x, y};
  }
  return make_scenario(std::move(aps), std::move(users), L, area_side, seed,
                       model, shadow_sigma_db);
}

namespace {

nlohmann::json points_to_json(const std::vector<Eigen::Vector2d>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back({p.x(), p.y()});
  return arr;
}

std::vector<Eigen::Vector2d> points_from_json(const nlohmann::json& arr) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(arr.size());
  for (const auto& p : arr) {
    pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  return pts;
}

}  // namespace

void save_scenario(const Scenario& scn, const std::string& path) {
  nlohmann::json j;
  j["area_side"] = scn.area_side;
  j["antennas_per_ap"] = scn.antennas_per_ap;
  j["shadow_sigma_db"] = scn.shadow_sigma_db;
  j["rng_seed"] = scn.rng_seed;
  j["ap_positions"] = points_to_json(scn.ap_positions);
  j["user_positions"] = points_to_json(scn.user_positions);
  j["path_loss"] = {{"d0_m", scn.path_loss.d0_m},
                    {"d1_m", scn.path_loss.d1_m},
                    {"carrier_mhz", scn.path_loss.carrier_mhz},
                    {"ap_height_m", scn.path_loss.ap_height_m},
                    {"user_height_m", scn.path_loss.user_height_m}};
  nlohmann::json beta = nlohmann::json::array();
  for (int m = 0; m < scn.beta.rows(); ++m) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < scn.beta.cols(); ++k) row.push_back(scn.beta(m, k));
    beta.push_back(std::move(row));
  }
  j["beta"] = std::move(beta);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_scenario: cannot write " + path);
  out << j.dump(2) << "\n";
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_scenario: cannot read " + path);
  nlohmann::json j;
  in >> j;
  Scenario scn;
  scn.area_side = j.at("area_side").get<double>();
  scn.antennas_per_ap = j.at("antennas_per_ap").get<int>();
  scn.shadow_sigma_db = j.at("shadow_sigma_db").get<double>();
  scn.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  scn.ap_positions = points_from_json(j.at("ap_positions"));
  scn.user_positions = points_from_json(j.at("user_positions"));
  if (j.contains("path_loss")) {
    const auto& pl = j.at("path_loss");
    scn.path_loss.d0_m = pl.at("d0_m").get<double>();
    scn.path_loss.d1_m = pl.at("d1_m").get<double>();
    scn.path_loss.carrier_mhz = pl.at("carrier_mhz").get<double>();
    scn.path_loss.ap_height_m = pl.at("ap_height_m").get<double>();
    scn.path_loss.user_height_m = pl.at("user_height_m").get<double>();
  }
  const auto& beta = j.at("beta");
  const int M = scn.num_aps();
  const int K = scn.num_users();
  scn.beta.resize(M, K);
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k) {
      scn.beta(m, k) = beta.at(m).at(k).get<double>();
    }
  }
  return scn;
}

}  // namespace cfm
