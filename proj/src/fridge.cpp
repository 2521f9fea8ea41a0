#include "fridge.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "logging.hpp"

namespace cryoeo {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

double boundary_temperature(const FridgeModel& fridge, double heat_load) {
  if (heat_load < 0.0) {
    raise(ErrorCode::InvalidArgument, "fridge", "negative heat load");
  }
  if (fridge.table_P.empty()) {
    if (!(fridge.base_temp > 0.0) || !(fridge.kappa_f > 0.0)) {
      raise(ErrorCode::InvalidArgument, "fridge",
            "base_temp and kappa_f must be positive");
    }
    return std::sqrt(fridge.base_temp * fridge.base_temp +
                     heat_load / fridge.kappa_f);
  }
  const auto& P = fridge.table_P;
  const auto& T = fridge.table_T;
  if (heat_load <= P.front()) {
    if (heat_load < P.front()) {
      log::warn("fridge", "load below table range; clamping to first entry");
    }
    return T.front();
  }
  if (heat_load >= P.back()) {
    if (heat_load > P.back()) {
      log::warn("fridge", "load above table range; clamping to last entry");
    }
    return T.back();
  }
  const auto it = std::upper_bound(P.begin(), P.end(), heat_load);
  const std::size_t k = static_cast<std::size_t>(it - P.begin());
  const double w = (heat_load - P[k - 1]) / (P[k] - P[k - 1]);
  return T[k - 1] + w * (T[k] - T[k - 1]);
}

double average_heat_load(const PumpSchedule& sched) {
  if (sched.P_o < 0.0) {
    raise(ErrorCode::InvalidArgument, "fridge", "negative power");
  }
  const double absorbed = sched.P_o * sched.heat_fraction;
  if (sched.mode == PumpSchedule::Mode::Pulsed) {
    if (!(sched.duty > 0.0 && sched.duty <= 1.0)) {
      raise(ErrorCode::InvalidArgument, "fridge",
            "duty cycle must lie in (0, 1]");
    }
    return sched.duty * absorbed;
  }
  return absorbed;
}

FridgeModel load_fridge_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::IoError, "fridge", "cannot open table " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    raise(ErrorCode::ParseError, "fridge", "empty table file " + path);
  }
  {
    std::stringstream hs(line);
    std::string c0, c1;
    std::getline(hs, c0, ',');
    std::getline(hs, c1, ',');
    if (strip(c0) != "P_W" || strip(c1) != "T_K") {
      raise(ErrorCode::ParseError, "fridge",
            "table header must be \"P_W, T_K\", got \"" + strip(line) + "\"");
    }
  }
  FridgeModel model;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::stringstream ls(body);
    std::string c0, c1;
    std::getline(ls, c0, ',');
    std::getline(ls, c1, ',');
    double P = 0.0, T = 0.0;
    try {
      P = std::stod(strip(c0));
      T = std::stod(strip(c1));
    } catch (const std::exception&) {
      raise(ErrorCode::ParseError, "fridge",
            "line " + std::to_string(lineno) + ": cannot parse \"" + body +
                "\"");
    }
    if (!model.table_P.empty()) {
      if (P <= model.table_P.back() || T <= model.table_T.back()) {
        raise(ErrorCode::ParseError, "fridge",
              "line " + std::to_string(lineno) +
                  ": table must increase strictly in both columns");
      }
    }
    model.table_P.push_back(P);
    model.table_T.push_back(T);
  }
  if (model.table_P.size() < 2) {
    raise(ErrorCode::ParseError, "fridge",
          "table needs at least two rows: " + path);
  }
  model.base_temp = model.table_T.front();
  return model;
}

}  // namespace cryoeo
