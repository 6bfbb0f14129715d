#pragma once

#include <vector>

#include "invmap/analysis.hpp"
#include "invmap/core.hpp"
#include "invmap/inverse.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

struct EnergyStats {
  long cells_in_region = 0;
  long masked = 0;
  long jumps = 0;
};

// midpoint quadrature of |Dh|^2 over the region; undefined cells and cells
// adjacent to detected jumps are masked; throws when the mask exceeds the
// limit fraction of the region
double dirichlet_energy(const InverseMap& inv, const Region& region,
                        const Thresholds& th = {}, EnergyStats* stats = nullptr);

// midpoint quadrature of the distortion over good cells in the region
double distortion_integral(const MapAnalysis& analysis, const Region& region,
                           int threads = 0);

struct EnergyReport {
  double lhs = 0.0;          // target-side Dirichlet energy
  double rhs = 0.0;          // source-side distortion integral
  double rel_err = 0.0;
  int res = 0;
  long masked_cells = 0;
  std::vector<Cavity>* cavities = nullptr;
};

// runs analyze + build_inverse + both quadratures at one resolution
EnergyReport energy_identity(const PlanarMap& map, const Region& source_region,
                             const Region& target_region, int res,
                             const Thresholds& th = {});

struct KeyEstimateProbe {
  Vec2 center;
  double p = 1.5;
  std::vector<double> radii;
  std::vector<double> lhs_diam;     // diam of the sampled preimage of B_r
  std::vector<double> measure_2r;   // area of the sampled preimage of B_2r
  std::vector<double> energy_2r;    // integral of |Df|^p over it
  std::vector<double> phi_2r;       // integral of the pullback density
  std::vector<double> ratio;        // diam / (r^-1 measure^((p-1)/p) energy^(1/p))
  std::vector<char> no_preimage;
};

KeyEstimateProbe key_estimate_probe(const PlanarMap& map,
                                    const MapAnalysis& analysis,
                                    const InverseMap& inv, const Vec2& center,
                                    const std::vector<double>& radii, double p,
                                    int threads = 0);

}  // namespace invmap
