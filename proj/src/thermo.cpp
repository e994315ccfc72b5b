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

#include "corrwork/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "corrwork/error.hpp"
#include "corrwork/numerics.hpp"

namespace corrwork::thermo {

namespace {

constexpr double kBracketShrink = 1e-9;
constexpr double kRootTol = 1e-12;
constexpr double kSingularTol = 1e-12;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

RegionId growing_region(const Wall& w) {
  return w.expands == Side::left ? w.left : w.right;
}

RegionId shrinking_region(const Wall& w) {
  return w.expands == Side::left ? w.right : w.left;
}

double min_populated_volume(const MembraneNetwork& net) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& s : net.species()) {
    if (s.count > 0.0) smallest = std::min(smallest, net.accessible_volume(s));
  }
  return smallest;
}

}  // namespace

void GasSpec::validate() const {
  if (!positive_finite(n_molecules) || !positive_finite(temperature) ||
      !positive_finite(boltzmann) || !positive_finite(half_volume)) {
    throw Error(ErrorCode::domain, "N, T, k and V must be finite and positive");
  }
}

RegionId MembraneNetwork::add_region(double volume) {
  if (!(volume >= 0.0) || !std::isfinite(volume)) {
    throw Error(ErrorCode::domain, "region volume must be non-negative");
  }
  regions_.push_back({volume});
  return regions_.size() - 1;
}

WallId MembraneNetwork::add_wall(Wall wall) {
  if (wall.left >= regions_.size() || wall.right >= regions_.size() ||
      wall.left == wall.right) {
    throw Error(ErrorCode::domain, "wall must join two distinct regions");
  }
  for (StateId s : wall.permeable) {
    if (s >= state_count_) {
      throw Error(ErrorCode::domain,
                  "wall passes undeclared state " + std::to_string(s));
    }
  }
  walls_.push_back(std::move(wall));
  return walls_.size() - 1;
}

void MembraneNetwork::add_species(Species species) {
  if (species.state >= state_count_) {
    throw Error(ErrorCode::domain, "species refers to an undeclared state");
  }
  if (species.origin >= regions_.size()) {
    throw Error(ErrorCode::domain, "species origin is not a region");
  }
  if (!(species.count >= 0.0) || !std::isfinite(species.count)) {
    throw Error(ErrorCode::domain, "species count must be non-negative");
  }
  for (const auto& s : species_) {
    if (s.label == species.label) {
      throw Error(ErrorCode::domain, "duplicate species label " + s.label);
    }
  }
  species_.push_back(std::move(species));
}

const Species& MembraneNetwork::find_species(std::string_view label) const {
  for (const auto& s : species_) {
    if (s.label == label) return s;
  }
  throw Error(ErrorCode::unknown_species, std::string(label));
}

void MembraneNetwork::displace(WallId wall, double amount) {
  if (wall >= walls_.size()) {
    throw Error(ErrorCode::invalid_argument, "no such wall");
  }
  const Wall& w = walls_[wall];
  if (!w.movable) {
    throw Error(ErrorCode::not_a_piston, "wall " + std::to_string(wall));
  }
  Region& grow = regions_[growing_region(w)];
  Region& shrink = regions_[shrinking_region(w)];
  const double slack = 1e-15 * total_volume();
  double moved = amount;
  if (shrink.volume - moved < 0.0 && shrink.volume - moved > -slack) {
    moved = shrink.volume;
  }
  if (grow.volume + moved < 0.0 && grow.volume + moved > -slack) {
    moved = -grow.volume;
  }
  if (shrink.volume - moved < 0.0 || grow.volume + moved < 0.0) {
    throw Error(ErrorCode::domain, "piston displacement leaves negative volume");
  }
  shrink.volume -= moved;
  grow.volume += moved;
}

double MembraneNetwork::total_volume() const {
  double v = 0.0;
  for (const auto& r : regions_) v += r.volume;
  return v;
}

double MembraneNetwork::total_count() const {
  double n = 0.0;
  for (const auto& s : species_) n += s.count;
  return n;
}

std::vector<bool> MembraneNetwork::reachable(StateId state, RegionId origin) const {
  std::vector<bool> seen(regions_.size(), false);
  std::vector<RegionId> frontier{origin};
  seen[origin] = true;
  while (!frontier.empty()) {
    const RegionId r = frontier.back();
    frontier.pop_back();
    for (const auto& w : walls_) {
      if (!w.permeable.contains(state)) continue;
      std::optional<RegionId> next;
      if (w.left == r) next = w.right;
      if (w.right == r) next = w.left;
      if (next && !seen[*next]) {
        seen[*next] = true;
        frontier.push_back(*next);
      }
    }
  }
  return seen;
}

double MembraneNetwork::accessible_volume(const Species& s) const {
  const auto seen = reachable(s.state, s.origin);
  double v = 0.0;
  for (RegionId r = 0; r < regions_.size(); ++r) {
    if (seen[r]) v += regions_[r].volume;
  }
  return v;
}

double MembraneNetwork::local_count(const Species& s, RegionId r) const {
  if (s.count == 0.0 || !reachable(s.state, s.origin)[r]) return 0.0;
  const double acc = accessible_volume(s);
  if (acc <= 0.0) {
    // Everything sits in the origin when the component has no volume.
    return r == s.origin ? s.count : 0.0;
  }
  return s.count * regions_[r].volume / acc;
}

double accessible_volume(const MembraneNetwork& net, std::string_view label) {
  return net.accessible_volume(net.find_species(label));
}

double region_pressure(const MembraneNetwork& net, const GasSpec& spec,
                       RegionId region) {
  if (region >= net.regions().size()) {
    throw Error(ErrorCode::invalid_argument, "no such region");
  }
  double pressure = 0.0;
  for (const auto& s : net.species()) {
    // Empty populations are skipped before any division.
    if (s.count == 0.0) continue;
    if (!net.reachable(s.state, s.origin)[region]) continue;
    const double acc = net.accessible_volume(s);
    if (acc <= 0.0) {
      throw Error(ErrorCode::zero_volume, "species " + s.label + " has no room");
    }
    pressure += s.count * spec.kt() / acc;
  }
  return pressure;
}

double piston_pressure_gap(const MembraneNetwork& net, const GasSpec& spec,
                           WallId wall) {
  if (wall >= net.walls().size()) {
    throw Error(ErrorCode::invalid_argument, "no such wall");
  }
  const Wall& w = net.walls()[wall];
  if (!w.movable) {
    throw Error(ErrorCode::not_a_piston, "wall " + std::to_string(wall));
  }
  return region_pressure(net, spec, growing_region(w)) -
         region_pressure(net, spec, shrinking_region(w));
}

TwoPistonLayout two_piston_layout(const MembraneNetwork& net) {
  std::optional<WallId> left;
  std::optional<WallId> right;
  std::size_t pistons = 0;
  for (WallId i = 0; i < net.walls().size(); ++i) {
    const Wall& w = net.walls()[i];
    if (!w.movable) continue;
    ++pistons;
    if (w.expands == Side::right) left = i;
    if (w.expands == Side::left) right = i;
  }
  if (pistons != 2 || !left || !right ||
      growing_region(net.walls()[*left]) != growing_region(net.walls()[*right])) {
    throw Error(ErrorCode::invalid_argument,
                "expected two pistons bounding one middle region");
  }
  return {*left, *right};
}

MembraneNetwork displaced(const MembraneNetwork& net, PistonDisplacement d) {
  const TwoPistonLayout layout = two_piston_layout(net);
  MembraneNetwork out = net;
  out.displace(layout.right_piston, d.v1);
  out.displace(layout.left_piston, d.v2);
  return out;
}

Equilibrium equilibrium_displacement(const MembraneNetwork& net,
                                     const GasSpec& spec) {
  spec.validate();
  const TwoPistonLayout layout = two_piston_layout(net);
  const double v_scale = spec.half_volume;
  const double gap_floor = 1e-12 * spec.nkt() / v_scale;

  const double right_room =
      net.regions()[shrinking_region(net.walls()[layout.right_piston])].volume;
  const double left_room =
      net.regions()[shrinking_region(net.walls()[layout.left_piston])].volume;
  const double room = std::min(right_room, left_room);
  const double upper = room * (1.0 - kBracketShrink);

  struct PistonRoot {
    double travel;
    bool degenerate;
    bool reached_end;
  };
  auto solve = [&](WallId piston) -> PistonRoot {
    auto gap = [&](double v) {
      return piston_pressure_gap(displaced(net, {v, v}), spec, piston);
    };
    const double at_start = gap(0.0);
    if (std::abs(at_start) <= gap_floor) return {0.0, true, false};
    if (at_start < 0.0) {
      throw Error(ErrorCode::no_root, "piston is pushed inward at the start");
    }
    if (gap(upper) > 0.0) return {room, false, true};
    return {numerics::bisect(gap, 0.0, upper, kRootTol * v_scale), false, false};
  };

  const PistonRoot r = solve(layout.right_piston);
  const PistonRoot l = solve(layout.left_piston);
  return {{r.travel, l.travel},
          r.degenerate && l.degenerate,
          r.reached_end && l.reached_end};
}

PistonPath symmetric_path(double travel) { return {{0.0, 0.0}, {travel, travel}}; }

double quasistatic_work(const MembraneNetwork& net, const GasSpec& spec,
                        const PistonPath& path, QuadratureOptions opts) {
  spec.validate();
  const TwoPistonLayout layout = two_piston_layout(net);
  if (path.empty() || path.front().v1 != 0.0 || path.front().v2 != 0.0) {
    throw Error(ErrorCode::path_not_monotone, "path must start at zero displacement");
  }
  std::size_t segments = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double d1 = path[i].v1 - path[i - 1].v1;
    const double d2 = path[i].v2 - path[i - 1].v2;
    if (!(d1 >= 0.0) || !(d2 >= 0.0)) {
      throw Error(ErrorCode::path_not_monotone,
                  "waypoint " + std::to_string(i) + " moves a piston inward");
    }
    if (d1 > 0.0 || d2 > 0.0) ++segments;
  }
  if (segments == 0) return 0.0;

  const double singular_floor = kSingularTol * spec.half_volume;
  const double tol = opts.tolerance * spec.nkt() / static_cast<double>(segments);

  double work = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const PistonDisplacement a = path[i - 1];
    const PistonDisplacement b = path[i];
    const double d1 = b.v1 - a.v1;
    const double d2 = b.v2 - a.v2;
    if (d1 == 0.0 && d2 == 0.0) continue;
    auto integrand = [&](double t) {
      const MembraneNetwork at = displaced(net, {a.v1 + t * d1, a.v2 + t * d2});
      if (min_populated_volume(at) < singular_floor) {
        throw Error(ErrorCode::singularity,
                    "accessible volume collapses along the path");
      }
      double f = 0.0;
      if (d1 > 0.0) f += piston_pressure_gap(at, spec, layout.right_piston) * d1;
      if (d2 > 0.0) f += piston_pressure_gap(at, spec, layout.left_piston) * d2;
      return f;
    };
    work += numerics::adaptive_simpson(integrand, 0.0, 1.0, tol, opts.max_depth);
  }
  return work;
}

double quasistatic_work(const MembraneNetwork& net, const GasSpec& spec,
                        QuadratureOptions opts) {
  const Equilibrium eq = equilibrium_displacement(net, spec);
  return quasistatic_work(net, spec, {{0.0, 0.0}, eq.displacement}, opts);
}

double closed_form_work(states::CorrelationParam p, const GasSpec& spec) {
  spec.validate();
  return spec.nkt() * (std::numbers::ln2 - states::binary_entropy(p.value()));
}

MembraneNetwork semipermeable_vessel(double half_volume, std::size_t n_states,
                                     std::set<StateId> left_pass,
                                     std::set<StateId> right_pass,
                                     std::span<const Population> left_gas,
                                     std::span<const Population> right_gas) {
  MembraneNetwork net;
  for (std::size_t i = 0; i < n_states; ++i) net.declare_state();
  net.add_region(half_volume);
  net.add_region(0.0);
  net.add_region(half_volume);
  net.add_wall({kLeftRegion, kMiddleRegion, std::move(left_pass), true, Side::right});
  net.add_wall({kMiddleRegion, kRightRegion, std::move(right_pass), true, Side::left});
  for (const auto& p : left_gas) net.add_species({p.label, p.state, p.count, kLeftRegion});
  for (const auto& p : right_gas) net.add_species({p.label, p.state, p.count, kRightRegion});
  return net;
}

}  // namespace corrwork::thermo
