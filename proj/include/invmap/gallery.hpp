#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invmap/core.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

struct GalleryProps {
  bool finite_distortion = false;
  bool satisfies_inv = false;
  enum class InverseReg { sobolev, bv_only, na };
  InverseReg inverse_regularity = InverseReg::na;
  struct KnownCavity {
    Vec2 center;
    double area;
  };
  std::vector<KnownCavity> known_cavities;
};

struct GalleryEntry {
  std::string name;
  std::string description;
  PlanarMap map;
  GalleryProps props;
  Region source_region;  // integration window in the source
  Region target_region;  // integration window in the target
};

// resolves a catalog name with optional arguments, e.g. "linear(a=2,b=1)";
// throws Errc::unknown_entry for names outside the catalog
GalleryEntry gallery_get(const std::string& spec);

// stable catalog listing: (name, one line description)
std::vector<std::pair<std::string, std::string>> gallery_list();

// resolves either a catalog spec or a GRIDMAP2/PWA2 file path
GalleryEntry load_map_spec(const std::string& spec);

// piecewise-affine stages of the bad_inv_nofd composition, for tests
PwaData bad_inv_stage(char which);  // 'b', 'l' or 'r'

}  // namespace invmap
