#include "device.hpp"

#include <cmath>
#include <string>

#include "constants.hpp"
#include "errors.hpp"

namespace cryoeo {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) raise(ErrorCode::InvalidArgument, "device", what);
}

}  // namespace

void validate(const DeviceSpec& s) {
  require(s.major_radius > 0.0, "major_radius must be positive");
  require(s.thickness > 0.0, "thickness must be positive");
  require(s.side_curvature > 0.0, "side_curvature must be positive");
  require(s.source_cross_section_radius >= 0.0,
          "source_cross_section_radius must be non-negative");
  require(s.source_radial_inset >= 0.0,
          "source_radial_inset must be non-negative");
  require(s.mw_annulus_width > 0.0 && s.mw_annulus_width <= s.major_radius,
          "mw_annulus_width must lie in (0, major_radius]");
  require(s.contact_inner_radius > 0.0 &&
              s.contact_inner_radius < s.contact_outer_radius &&
              s.contact_outer_radius <= s.major_radius,
          "need 0 < contact_inner_radius < contact_outer_radius <= "
          "major_radius");
  // The heated torus must sit strictly inside the cross-section.
  const double a = s.source_cross_section_radius;
  if (a > 0.0) {
    require(s.source_radial_inset - a > 0.0 &&
                source_center_radius(s) - a > 0.0,
            "source torus must lie strictly inside the disc radially");
    require(a < 0.5 * s.thickness,
            "source torus must lie strictly inside the disc axially");
  }
  if (s.side_contact_height >= 0.0) {
    require(s.side_contact_height <= s.thickness,
            "side_contact_height cannot exceed the thickness");
  }
  if (s.include_copper) {
    require(s.copper_shell_thickness > 0.0,
            "copper_shell_thickness must be positive when include_copper is "
            "set");
  }
}

double optical_mode_volume(const DeviceSpec& s) {
  const double a = s.source_cross_section_radius;
  return constants::kTwoPi * source_center_radius(s) * constants::kPi * a * a;
}

double source_center_radius(const DeviceSpec& s) {
  return s.major_radius - s.source_radial_inset;
}

double side_contact_band(const DeviceSpec& s) {
  return s.side_contact_height < 0.0 ? s.thickness : s.side_contact_height;
}

Region region_of(const DeviceSpec& s, double r, double z) {
  const double half = 0.5 * s.thickness;
  if (r < 0.0 || std::abs(z) > half) return Region::Outside;
  if (r > s.major_radius) {
    if (s.include_copper && r <= s.major_radius + s.copper_shell_thickness) {
      return Region::CopperShell;
    }
    return Region::Outside;
  }
  const double dr = r - source_center_radius(s);
  const double a = s.source_cross_section_radius;
  if (dr * dr + z * z <= a * a) return Region::Source;
  if (r >= s.major_radius - s.mw_annulus_width) return Region::MwAnnulus;
  return Region::Dielectric;
}

}  // namespace cryoeo
