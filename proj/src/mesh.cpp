#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "constants.hpp"
#include "errors.hpp"

namespace cryoeo {

namespace {

constexpr double kGradingRatio = 1.15;  // per-cell geometric stretch (<= 1.2)

std::vector<double> linspace(double lo, double hi, int n_cells) {
  std::vector<double> f(n_cells + 1);
  for (int i = 0; i <= n_cells; ++i) {
    f[i] = lo + (hi - lo) * static_cast<double>(i) / n_cells;
  }
  f.front() = lo;
  f.back() = hi;
  return f;
}

// Graded 1-D face array: uniform h_fine inside [fine_lo, fine_hi], geometric
// growth (factor <= kGradingRatio) marching outward, snapping to interior
// station values (contact-ring and annulus edges) so region boundaries
// coincide with cell faces.
std::vector<double> graded_faces(double lo, double hi, double fine_lo,
                                 double fine_hi, double h_fine, double h_max,
                                 const std::vector<double>& snap_stations) {
  const int n_fine =
      std::max(2, static_cast<int>(std::llround((fine_hi - fine_lo) / h_fine)));
  std::vector<double> faces = linspace(fine_lo, fine_hi, n_fine);

  std::set<double> snap_set;
  for (double s : snap_stations) {
    if (lo < s && s < hi) snap_set.insert(s);
  }
  const std::vector<double> snaps(snap_set.begin(), snap_set.end());

  auto march = [&](double start, double end, double direction) {
    std::vector<double> out;
    double pos = start;
    double h = h_fine;
    while ((end - pos) * direction > 1e-15) {
      h = std::min(h * kGradingRatio, h_max);
      double nxt = pos + h * direction;
      // Snap to any station this step would cross.
      if (direction > 0) {
        for (double s : snaps) {
          if ((s - pos) * direction > 1e-12 &&
              (nxt - s) * direction > -1e-12) {
            nxt = s;
            break;
          }
        }
      } else {
        for (auto it = snaps.rbegin(); it != snaps.rend(); ++it) {
          const double s = *it;
          if ((s - pos) * direction > 1e-12 &&
              (nxt - s) * direction > -1e-12) {
            nxt = s;
            break;
          }
        }
      }
      if ((end - nxt) * direction < h_fine * 0.4) nxt = end;
      out.push_back(nxt);
      pos = nxt;
    }
    return out;
  };

  std::vector<double> all;
  all.push_back(lo);
  all.push_back(hi);
  all.insert(all.end(), faces.begin(), faces.end());
  const auto lower = march(fine_lo, lo, -1.0);
  const auto upper = march(fine_hi, hi, +1.0);
  all.insert(all.end(), lower.begin(), lower.end());
  all.insert(all.end(), upper.begin(), upper.end());
  std::sort(all.begin(), all.end());

  // Drop degenerate gaps.
  std::vector<double> dedup;
  dedup.push_back(all.front());
  for (std::size_t k = 1; k < all.size(); ++k) {
    if (all[k] - dedup.back() > 1e-12) dedup.push_back(all[k]);
  }
  return dedup;
}

}  // namespace

double AxiMesh::total_volume() const {
  double v = 0.0;
  for (double c : cell_volume) v += c;
  return v;
}

double AxiMesh::source_volume() const {
  double v = 0.0;
  for (int c = 0; c < cell_count(); ++c) {
    if (in_source[c]) v += cell_volume[c];
  }
  return v;
}

bool AxiMesh::face_contact(int i) const {
  return spec.contact_inner_radius <= r_center[i] &&
         r_center[i] <= spec.contact_outer_radius;
}

bool AxiMesh::side_contact(int j) const {
  const double band = side_contact_band(spec);
  return std::abs(z_center[j]) > 0.5 * spec.thickness - band;
}

AxiMesh build_mesh(const DeviceSpec& spec, int nr, int nz,
                   double refine_source) {
  validate(spec);
  if (nr < 4 || nz < 4) {
    raise(ErrorCode::InvalidArgument, "mesh",
          "resolution targets nr, nz must be at least 4");
  }
  const bool uniform = refine_source == 0.0;
  if (!uniform && refine_source < 2.0) {
    raise(ErrorCode::InvalidArgument, "mesh",
          "refine_source must be 0 (uniform) or >= 2 (source cells no larger "
          "than half the torus radius)");
  }

  const double R = spec.major_radius;
  const double d = spec.thickness;
  const double half = 0.5 * d;
  const double a = spec.source_cross_section_radius;
  const double r_s = source_center_radius(spec);
  const double h_max_r = R / nr;
  const double h_max_z = d / nz;

  AxiMesh m;
  m.spec = spec;
  if (uniform || a == 0.0) {
    m.r_faces = linspace(0.0, R, nr);
    m.z_faces = linspace(-half, half, nz);
  } else {
    const double h_fine = a / refine_source;
    std::vector<double> r_snaps = {spec.contact_inner_radius,
                                   spec.contact_outer_radius,
                                   R - spec.mw_annulus_width};
    m.r_faces = graded_faces(0.0, R, r_s - a, std::min(r_s + a, R), h_fine,
                             h_max_r, r_snaps);
    const double band = side_contact_band(spec);
    std::vector<double> z_snaps;
    if (band > 0.0 && band < d) {
      z_snaps.push_back(half - band);
      z_snaps.push_back(band - half);
    }
    m.z_faces = graded_faces(-half, half, std::max(-a, -half),
                             std::min(a, half), h_fine, h_max_z, z_snaps);
  }

  m.nr = static_cast<int>(m.r_faces.size()) - 1;
  m.nz = static_cast<int>(m.z_faces.size()) - 1;
  m.r_center.resize(m.nr);
  m.dr.resize(m.nr);
  for (int i = 0; i < m.nr; ++i) {
    m.r_center[i] = 0.5 * (m.r_faces[i] + m.r_faces[i + 1]);
    m.dr[i] = m.r_faces[i + 1] - m.r_faces[i];
  }
  m.z_center.resize(m.nz);
  m.dz.resize(m.nz);
  for (int j = 0; j < m.nz; ++j) {
    m.z_center[j] = 0.5 * (m.z_faces[j] + m.z_faces[j + 1]);
    m.dz[j] = m.z_faces[j + 1] - m.z_faces[j];
  }

  const int n = m.cell_count();
  m.cell_volume.resize(n);
  m.cell_region.resize(n);
  m.in_source.assign(n, 0);
  m.in_mw.assign(n, 0);
  int src_i_lo = m.nr, src_i_hi = -1, src_j_lo = m.nz, src_j_hi = -1;
  for (int i = 0; i < m.nr; ++i) {
    const double ring =
        constants::kPi *
        (m.r_faces[i + 1] * m.r_faces[i + 1] - m.r_faces[i] * m.r_faces[i]);
    for (int j = 0; j < m.nz; ++j) {
      const int c = m.index(i, j);
      m.cell_volume[c] = ring * m.dz[j];
      const double drc = m.r_center[i] - r_s;
      const double zc = m.z_center[j];
      const bool src = a > 0.0 && drc * drc + zc * zc <= a * a;
      const bool mw = m.r_center[i] >= R - spec.mw_annulus_width;
      m.in_source[c] = src ? 1 : 0;
      m.in_mw[c] = mw ? 1 : 0;
      m.cell_region[c] =
          src ? Region::Source : (mw ? Region::MwAnnulus : Region::Dielectric);
      if (src) {
        src_i_lo = std::min(src_i_lo, i);
        src_i_hi = std::max(src_i_hi, i);
        src_j_lo = std::min(src_j_lo, j);
        src_j_hi = std::max(src_j_hi, j);
      }
    }
  }

  if (a > 0.0) {
    const bool resolved =
        src_i_hi - src_i_lo + 1 >= 2 && src_j_hi - src_j_lo + 1 >= 2;
    if (!resolved) {
      raise(ErrorCode::MeshError, "mesh",
            "source torus spans fewer than 2 cells in some direction; "
            "increase nr/nz or refine_source");
    }
  }
  return m;
}

double volume_average(const std::vector<double>& field, const AxiMesh& mesh,
                      Region tag) {
  if (field.size() != static_cast<std::size_t>(mesh.cell_count())) {
    raise(ErrorCode::InvalidArgument, "mesh",
          "field size does not match mesh cell count");
  }
  double num = 0.0, den = 0.0;
  for (int c = 0; c < mesh.cell_count(); ++c) {
    bool in = false;
    switch (tag) {
      case Region::Source:
        in = mesh.in_source[c] != 0;
        break;
      case Region::MwAnnulus:
        in = mesh.in_mw[c] != 0;
        break;
      case Region::Dielectric:
        in = true;  // the whole body, of which source/annulus are subsets
        break;
      default:
        in = false;
        break;
    }
    if (in) {
      num += field[c] * mesh.cell_volume[c];
      den += mesh.cell_volume[c];
    }
  }
  if (den == 0.0) {
    raise(ErrorCode::EmptyRegion, "mesh", "no cells carry the requested tag");
  }
  return num / den;
}

void write_mesh_csv(const AxiMesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) raise(ErrorCode::IoError, "mesh", "cannot open " + path);
  std::fprintf(f, "r_m, z_m, volume_m3, region\n");
  const char* names[] = {"dielectric", "source", "mw_annulus", "copper_shell",
                         "outside"};
  for (int i = 0; i < mesh.nr; ++i) {
    for (int j = 0; j < mesh.nz; ++j) {
      const int c = mesh.index(i, j);
      std::fprintf(f, "%.9e, %.9e, %.9e, %s\n", mesh.r_center[i],
                   mesh.z_center[j], mesh.cell_volume[c],
                   names[static_cast<int>(mesh.cell_region[c])]);
    }
  }
  std::fclose(f);
}

}  // namespace cryoeo
