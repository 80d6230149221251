#include "pilotwave/gridio.hpp"

#include "pilotwave/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pilotwave {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_sampling(CatalogId field, const GridSpec& spec) {
  validate(spec);
  if (depends_on_time(field) && !(spec.time > 0.0))
    throw std::domain_error("grid time must be positive for fields with a 1/t factor");
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

void validate(const GridSpec& spec) {
  if (spec.resolution < 2 || spec.resolution % 2 == 0)
    throw std::invalid_argument("grid resolution must be odd and at least 3");
  if (!(spec.mask_radius >= 0.0) || !(spec.half_width > spec.mask_radius))
    throw std::invalid_argument("grid needs half_width > mask_radius >= 0");
}

double grid_coordinate(const GridSpec& spec, int i) {
  const int half = (spec.resolution - 1) / 2;
  return spec.half_width * (static_cast<double>(i - half) / half);
}

FieldGrid sample_scalar(CatalogId field, const GridSpec& spec,
                        const OscillatorParams& p) {
  if (!is_scalar_field(field))
    throw std::invalid_argument("sample_scalar needs a scalar catalog id");
  check_sampling(field, spec);

  FieldGrid grid;
  grid.spec = spec;
  grid.field = field;
  grid.params = p;
  const std::size_t n = static_cast<std::size_t>(spec.resolution) * spec.resolution;
  grid.scalars.assign(n, 0.0);
  grid.masked.assign(n, 0);
  for (int iy = 0; iy < spec.resolution; ++iy) {
    const double y = grid_coordinate(spec, iy);
    for (int ix = 0; ix < spec.resolution; ++ix) {
      const double x = grid_coordinate(spec, ix);
      const double r = std::hypot(x, y);
      const std::size_t k = grid.index(ix, iy);
      if (r < spec.mask_radius) {
        grid.masked[k] = 1;
        continue;
      }
      grid.scalars[k] = eval_scalar(field, r, spec.time, p);
    }
  }
  return grid;
}

FieldGrid sample_velocity(CatalogId field, const GridSpec& spec,
                          const OscillatorParams& p) {
  if (!is_velocity_field(field))
    throw std::invalid_argument("sample_velocity needs a velocity catalog id");
  check_sampling(field, spec);

  FieldGrid grid;
  grid.spec = spec;
  grid.field = field;
  grid.params = p;
  const std::size_t n = static_cast<std::size_t>(spec.resolution) * spec.resolution;
  grid.velocities.assign(n, {});
  grid.masked.assign(n, 0);
  for (int iy = 0; iy < spec.resolution; ++iy) {
    const double y = grid_coordinate(spec, iy);
    for (int ix = 0; ix < spec.resolution; ++ix) {
      const double x = grid_coordinate(spec, ix);
      const double r = std::hypot(x, y);
      const std::size_t k = grid.index(ix, iy);
      if (r < spec.mask_radius) {
        grid.masked[k] = 1;
        continue;
      }
      if (r == 0.0) {
        // Every catalog velocity carries a factor of r; the azimuthal frame
        // is undefined at the origin but the limit is zero.
        grid.velocities[k] = {0.0, 0.0, 0.0};
        continue;
      }
      const double v_theta = eval_velocity(field, r, spec.time, p).v_theta;
      const double vx = -v_theta * y / r;
      const double vy = v_theta * x / r;
      grid.velocities[k] = {vx, vy, std::hypot(vx, vy)};
    }
  }
  return grid;
}

namespace {

void write_csv(const FieldGrid& grid, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  const bool vel = grid.is_velocity_grid();
  out << (vel ? "x_m,y_m,vx_mps,vy_mps,speed_mps\n" : "x_m,y_m,value\n");
  for (int iy = 0; iy < grid.spec.resolution; ++iy) {
    const double y = grid_coordinate(grid.spec, iy);
    for (int ix = 0; ix < grid.spec.resolution; ++ix) {
      const double x = grid_coordinate(grid.spec, ix);
      const std::size_t k = grid.index(ix, iy);
      out << fmt17(x) << ',' << fmt17(y) << ',';
      if (grid.masked[k]) {
        out << (vel ? ",,\n" : "\n");
      } else if (vel) {
        const VelocityNode& node = grid.velocities[k];
        out << fmt17(node.vx) << ',' << fmt17(node.vy) << ','
            << fmt17(node.speed) << '\n';
      } else {
        out << fmt17(grid.scalars[k]) << '\n';
      }
    }
  }
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

void write_json(const FieldGrid& grid, const std::filesystem::path& path) {
  json j;
  j["field"] = catalog_name(grid.field);
  j["kind"] = grid.is_velocity_grid() ? "velocity" : "scalar";
  j["energy_j"] = grid.params.energy;
  j["mass_kg"] = grid.params.mass;
  j["time_s"] = grid.spec.time;
  j["resolution"] = grid.spec.resolution;
  j["half_width_m"] = grid.spec.half_width;
  j["mask_radius_m"] = grid.spec.mask_radius;
  json values = json::array();
  const std::size_t n =
      static_cast<std::size_t>(grid.spec.resolution) * grid.spec.resolution;
  for (std::size_t k = 0; k < n; ++k) {
    if (grid.masked[k]) {
      values.push_back(nullptr);
    } else if (grid.is_velocity_grid()) {
      const VelocityNode& node = grid.velocities[k];
      values.push_back({node.vx, node.vy, node.speed});
    } else {
      values.push_back(grid.scalars[k]);
    }
  }
  j["values"] = std::move(values);
  std::ofstream out = open_out(path);
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

}  // namespace

void write_grid(const FieldGrid& grid, const std::filesystem::path& path,
                GridFormat format) {
  if (format == GridFormat::csv)
    write_csv(grid, path);
  else
    write_json(grid, path);
}

FieldGrid read_grid_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  json j;
  in >> j;

  FieldGrid grid;
  const auto id = parse_catalog_id(j.at("field").get<std::string>());
  if (!id) throw std::runtime_error("unknown field in '" + path.string() + "'");
  grid.field = *id;
  grid.params = params_from_energy(j.at("energy_j").get<double>(),
                                   j.at("mass_kg").get<double>());
  grid.spec.time = j.at("time_s").get<double>();
  grid.spec.resolution = j.at("resolution").get<int>();
  grid.spec.half_width = j.at("half_width_m").get<double>();
  grid.spec.mask_radius = j.at("mask_radius_m").get<double>();
  validate(grid.spec);

  const bool vel = j.at("kind").get<std::string>() == "velocity";
  const auto& values = j.at("values");
  const std::size_t n =
      static_cast<std::size_t>(grid.spec.resolution) * grid.spec.resolution;
  if (values.size() != n)
    throw std::runtime_error("value count mismatch in '" + path.string() + "'");
  grid.masked.assign(n, 0);
  if (vel)
    grid.velocities.assign(n, {});
  else
    grid.scalars.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& v = values[k];
    if (v.is_null()) {
      grid.masked[k] = 1;
    } else if (vel) {
      grid.velocities[k] = {v.at(0).get<double>(), v.at(1).get<double>(),
                            v.at(2).get<double>()};
    } else {
      grid.scalars[k] = v.get<double>();
    }
  }
  return grid;
}

const std::array<CatalogId, 8>& figure_fields() {
  static const std::array<CatalogId, 8> fields = {
      CatalogId::StandardPhi, CatalogId::DualRightPhi, CatalogId::DualLeftPhi,
      CatalogId::DualPhi,     CatalogId::Standard,     CatalogId::RightDual,
      CatalogId::LeftDual,    CatalogId::Corrected};
  return fields;
}

std::string grid_filename(CatalogId field, double energy_ev, int resolution,
                          GridFormat format) {
  char energy[32];
  std::snprintf(energy, sizeof(energy), "%g", energy_ev);
  return std::string(catalog_name(field)) + "_" + energy + "eV_" +
         std::to_string(resolution) + (format == GridFormat::csv ? ".csv" : ".json");
}

std::vector<std::filesystem::path> write_figure_grids(
    const std::filesystem::path& dir, const OscillatorParams& p,
    const GridSpec& spec, GridFormat format) {
  std::filesystem::create_directories(dir);
  const double energy_ev = p.energy / constants::electron_volt;
  std::vector<std::filesystem::path> paths;
  paths.reserve(figure_fields().size());
  for (CatalogId field : figure_fields()) {
    const FieldGrid grid = is_scalar_field(field)
                               ? sample_scalar(field, spec, p)
                               : sample_velocity(field, spec, p);
    std::filesystem::path path =
        dir / grid_filename(field, energy_ev, spec.resolution, format);
    write_grid(grid, path, format);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace pilotwave
