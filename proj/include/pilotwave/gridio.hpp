#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "pilotwave/catalog.hpp"
#include "pilotwave/physics.hpp"

namespace pilotwave {

// Cartesian sampling window matching the figure layout: a square of
// half_width around the origin with an odd node count so the axes pass
// through zero. Nodes with r < mask_radius export as null.
struct GridSpec {
  double half_width = 1e-9;    // m
  int resolution = 201;        // samples per axis, odd
  double time = 0;             // s
  double mask_radius = 1e-12;  // m
};

struct VelocityNode {
  double vx = 0;     // m/s
  double vy = 0;     // m/s
  double speed = 0;  // m/s
};

struct FieldGrid {
  GridSpec spec;
  CatalogId field = CatalogId::BornScalar;
  OscillatorParams params;
  std::vector<double> scalars;          // row-major, resolution^2; empty for velocity grids
  std::vector<VelocityNode> velocities; // row-major, resolution^2; empty for scalar grids
  std::vector<char> masked;             // resolution^2

  bool is_velocity_grid() const { return !velocities.empty(); }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * spec.resolution + ix;
  }
};

void validate(const GridSpec& spec);

// Node coordinate along one axis; exactly antisymmetric about the center.
double grid_coordinate(const GridSpec& spec, int i);

FieldGrid sample_scalar(CatalogId field, const GridSpec& spec,
                        const OscillatorParams& p);
FieldGrid sample_velocity(CatalogId field, const GridSpec& spec,
                          const OscillatorParams& p);

enum class GridFormat { csv, json };

// CSV columns: x_m,y_m,value for scalars and x_m,y_m,vx_mps,vy_mps,speed_mps
// for velocities, 17 significant digits; masked nodes leave the value cells
// empty. JSON mirrors the schema with a metadata header.
void write_grid(const FieldGrid& grid, const std::filesystem::path& path,
                GridFormat format);
FieldGrid read_grid_json(const std::filesystem::path& path);

// The eight figure datasets in order: the four scalar fields, then the four
// dimensionally valid velocities.
const std::array<CatalogId, 8>& figure_fields();

std::string grid_filename(CatalogId field, double energy_ev, int resolution,
                          GridFormat format);

// Samples and writes all eight figure grids into dir; returns the paths.
std::vector<std::filesystem::path> write_figure_grids(
    const std::filesystem::path& dir, const OscillatorParams& p,
    const GridSpec& spec, GridFormat format);

}  // namespace pilotwave
