// Copyright 2026 The corrwork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ideal-gas vessels partitioned by semipermeable walls.
//
// Every species spreads uniformly over the connected set of regions it can
// reach from its origin, treating walls that pass its internal state as
// open. Its partial pressure there is count * k * T / (accessible volume).
// Pistons are movable walls; a quasistatic expansion extracts the integral of
// the pressure difference across each piston over that piston's travel.

#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corrwork/states.hpp"

namespace corrwork::thermo {

struct GasSpec {
  double n_molecules = 1.0;
  double temperature = 1.0;
  double boltzmann = 1.0;
  double half_volume = 1.0;

  /// DomainError unless every field is finite and strictly positive.
  void validate() const;
  double kt() const { return boltzmann * temperature; }
  double nkt() const { return n_molecules * boltzmann * temperature; }
};

using RegionId = std::size_t;
using WallId = std::size_t;
using StateId = std::size_t;

enum class Side { left, right };

struct Region {
  double volume = 0.0;
};

struct Wall {
  RegionId left = 0;
  RegionId right = 0;
  std::set<StateId> permeable;
  bool movable = false;
  /// Side that grows when the wall moves by a positive displacement.
  Side expands = Side::left;
};

struct Species {
  std::string label;
  StateId state = 0;
  double count = 0.0;
  RegionId origin = 0;
};

class MembraneNetwork {
 public:
  StateId declare_state() { return state_count_++; }
  std::size_t state_count() const { return state_count_; }

  RegionId add_region(double volume);
  /// Throws DomainError on bad region ids or undeclared permeability states.
  WallId add_wall(Wall wall);
  /// Labels must be unique; counts non-negative.
  void add_species(Species species);

  const std::vector<Region>& regions() const { return regions_; }
  const std::vector<Wall>& walls() const { return walls_; }
  const std::vector<Species>& species() const { return species_; }

  /// UnknownSpecies if the label was never added.
  const Species& find_species(std::string_view label) const;

  /// Moves a piston by `amount` toward its shrinking side. DomainError if a
  /// region would get negative volume; NotAPiston for fixed walls.
  void displace(WallId wall, double amount);

  double total_volume() const;
  double total_count() const;

  /// Regions reachable from `origin` for molecules in internal state `state`.
  std::vector<bool> reachable(StateId state, RegionId origin) const;

  /// Molecules of `s` currently in region `r` (uniform spread over the
  /// accessible component).
  double local_count(const Species& s, RegionId r) const;

  double accessible_volume(const Species& s) const;

 private:
  std::size_t state_count_ = 0;
  std::vector<Region> regions_;
  std::vector<Wall> walls_;
  std::vector<Species> species_;
};

double accessible_volume(const MembraneNetwork& net, std::string_view label);

/// Sum of count * k * T / accessible volume over species reaching `region`.
/// ZeroVolume if a reaching species with molecules has no room.
double region_pressure(const MembraneNetwork& net, const GasSpec& spec,
                       RegionId region);

/// Pressure on the growing side minus pressure on the shrinking side; a
/// positive gap pushes the piston outward. NotAPiston for fixed walls.
double piston_pressure_gap(const MembraneNetwork& net, const GasSpec& spec,
                           WallId wall);

/// Travel of the two pistons in a left | middle | right vessel: v1 for the
/// right piston (moving right), v2 for the left piston (moving left).
struct PistonDisplacement {
  double v1 = 0.0;
  double v2 = 0.0;
};

struct TwoPistonLayout {
  WallId left_piston;
  WallId right_piston;
};

/// Identifies the two pistons that bound a common middle region.
/// InvalidArgument for any other configuration.
TwoPistonLayout two_piston_layout(const MembraneNetwork& net);

/// Copy of `net` with both pistons advanced by `d`.
MembraneNetwork displaced(const MembraneNetwork& net, PistonDisplacement d);

struct Equilibrium {
  PistonDisplacement displacement;
  /// No pressure imbalance at zero displacement; nothing moves.
  bool degenerate = false;
  /// The gap never closes and the pistons travel until the outer regions
  /// vanish.
  bool reached_end = false;
};

/// Displacement at which both piston gaps vanish, along the symmetric path.
/// Each gap is bracketed on [0, W (1 - 1e-9)] with W the volume the piston
/// sweeps into and bisected to 1e-12 * V. NoRoot if a gap is negative at the
/// start.
Equilibrium equilibrium_displacement(const MembraneNetwork& net,
                                     const GasSpec& spec);

/// Waypoints of a piston path, starting at {0, 0}; both coordinates must be
/// non-decreasing. Consecutive waypoints are joined by straight segments.
using PistonPath = std::vector<PistonDisplacement>;

PistonPath symmetric_path(double travel);

struct QuadratureOptions {
  /// Absolute tolerance in units of N k T.
  double tolerance = 1e-10;
  int max_depth = 40;
};

/// Work done on the pistons along `path`: the integral of the right-piston
/// gap over dv1 plus the left-piston gap over dv2. PathNotMonotone for bad
/// paths; Singularity when an accessible volume of a populated species falls
/// below 1e-12 * V.
double quasistatic_work(const MembraneNetwork& net, const GasSpec& spec,
                        const PistonPath& path, QuadratureOptions opts = {});

/// Same, along the symmetric path to equilibrium_displacement.
double quasistatic_work(const MembraneNetwork& net, const GasSpec& spec,
                        QuadratureOptions opts = {});

/// N k T (ln 2 - h(p)).
double closed_form_work(states::CorrelationParam p, const GasSpec& spec);

struct Population {
  std::string label;
  StateId state;
  double count;
};

inline constexpr RegionId kLeftRegion = 0;
inline constexpr RegionId kMiddleRegion = 1;
inline constexpr RegionId kRightRegion = 2;
inline constexpr WallId kLeftPiston = 0;
inline constexpr WallId kRightPiston = 1;

/// Left (V) | middle (0) | right (V) vessel with a piston on each side of the
/// middle. The left piston passes `left_pass`, the right one `right_pass`.
/// `n_states` internal states are declared.
MembraneNetwork semipermeable_vessel(double half_volume, std::size_t n_states,
                                     std::set<StateId> left_pass,
                                     std::set<StateId> right_pass,
                                     std::span<const Population> left_gas,
                                     std::span<const Population> right_gas);

}  // namespace corrwork::thermo
