#pragma once

namespace cryoeo {

// Axisymmetric disc resonator geometry in (r, z) with z = 0 at the midplane.
// The cross-section is modeled as a rectangle (radius x thickness); the side
// curvature is recorded for bookkeeping but not meshed -- rim rounding has a
// negligible effect on bulk heat diffusion.
//
// Default values are the tuned reference device used by all presets.
struct DeviceSpec {
  double major_radius = 2.5e-3;                // R [m]
  double side_curvature = 1.45e-3;             // recorded only [m]
  double thickness = 500e-6;                   // d [m]
  double source_radial_inset = 20e-6;          // rim -> mode center [m]
  double source_cross_section_radius = 12e-6;  // heat-source torus radius [m]
  double mw_annulus_width = 520e-6;            // microwave region width [m]
  double contact_inner_radius = 0.75e-3;       // face clamp ring inner [m]
  double contact_outer_radius = 2.34e-3;       // face clamp ring outer [m]
  // Height of the clamped band on the side wall, measured from each face.
  // Negative means the full side wall is held at the stage temperature (the
  // surrounding metal can is several orders of magnitude more conductive than
  // the dielectric below 1 K, so it acts as an isothermal extension of the
  // cold stage).  0 restricts contact to the face rings only.
  double side_contact_height = -1.0;
  bool include_copper = false;                 // classify an outer metal shell
  double copper_shell_thickness = 100e-6;      // shell radial thickness [m]
};

enum class Region {
  Dielectric,
  Source,
  MwAnnulus,
  CopperShell,
  Outside,
};

// Throws InvalidArgument on inconsistent geometry.
void validate(const DeviceSpec& spec);

// Volume of the uniformly heated torus occupied by the optical mode:
// 2*pi*(R - inset) * pi * a^2.
[[nodiscard]] double optical_mode_volume(const DeviceSpec& spec);

// Radius of the torus center circle, R - inset.
[[nodiscard]] double source_center_radius(const DeviceSpec& spec);

// Effective side-wall clamp height (resolves the negative "full wall" value).
[[nodiscard]] double side_contact_band(const DeviceSpec& spec);

// Classify a point.  The source torus and the microwave annulus are both
// subsets of the dielectric; the most specific tag wins (source over annulus).
[[nodiscard]] Region region_of(const DeviceSpec& spec, double r, double z);

}  // namespace cryoeo
