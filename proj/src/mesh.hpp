#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "device.hpp"

namespace cryoeo {

// Structured axisymmetric finite-volume grid over the disc cross-section,
// r in [0, R], z in [-d/2, +d/2].  Cells are stored row-major with
// index = i * nz + j (i radial, j axial).  Cell volumes are the exact
// solid-of-revolution volumes pi*(r_{i+1}^2 - r_i^2)*dz_j, so their sum
// equals pi R^2 d to machine precision.
struct AxiMesh {
  DeviceSpec spec;
  int nr = 0;
  int nz = 0;
  std::vector<double> r_faces;   // nr + 1
  std::vector<double> z_faces;   // nz + 1
  std::vector<double> r_center;  // nr
  std::vector<double> z_center;  // nz
  std::vector<double> dr;        // nr
  std::vector<double> dz;        // nz
  std::vector<double> cell_volume;   // nr * nz
  std::vector<Region> cell_region;   // nr * nz (most specific tag)
  // Non-exclusive masks: a source cell near the rim is also part of the
  // microwave annulus and contributes to its volume average.
  std::vector<std::uint8_t> in_source;  // nr * nz
  std::vector<std::uint8_t> in_mw;      // nr * nz

  [[nodiscard]] int index(int i, int j) const { return i * nz + j; }
  [[nodiscard]] int cell_count() const { return nr * nz; }
  [[nodiscard]] double total_volume() const;
  [[nodiscard]] double source_volume() const;

  // Dirichlet-contact classification used by the solver and for boundary
  // tagging: face rings on top/bottom, clamped band on the side wall.
  [[nodiscard]] bool face_contact(int i) const;  // top & bottom faces, row i
  [[nodiscard]] bool side_contact(int j) const;  // outer wall, column j
};

enum class BoundaryTag { Axis, Adiabatic, Contact };

// Build a graded grid with geometric stretching (ratio <= 1.2) away from a
// uniformly refined window around the heat-source torus.
//   nr, nz          far-field resolution targets: cell size caps R/nr, d/nz
//   refine_source   0   -> uniform spacing, no source window;
//                   >=2 -> source-window cell size = a / refine_source
//                          (i.e. at most half the torus cross-section radius)
// Fails with MeshError if the source torus ends up spanning fewer than two
// cells in either direction (unresolved heating region).
[[nodiscard]] AxiMesh build_mesh(const DeviceSpec& spec, int nr, int nz,
                                 double refine_source = 3.0);

// Volume-weighted average of a per-cell field over a tagged region.
// Region::Dielectric averages over the whole dielectric body (which contains
// the source and annulus); Region::MwAnnulus includes source cells that lie
// within the annulus.  Throws EmptyRegion if no cell matches.
[[nodiscard]] double volume_average(const std::vector<double>& field,
                                    const AxiMesh& mesh, Region tag);

// Debug/plotting dump: one row per cell (r_m, z_m, volume_m3, region).
void write_mesh_csv(const AxiMesh& mesh, const std::string& path);

}  // namespace cryoeo
