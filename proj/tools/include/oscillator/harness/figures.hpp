// Static SVG figures. Output depends only on the configuration: fixed
// viewBox, fixed number formatting, no timestamps.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "oscillator/harness/config.hpp"

namespace oscillator::harness {

/// Unit-circle trajectory of the exact flow with zeta-orbit markers.
std::string trajectory_svg(const ExperimentConfig& config);
/// Sector of opening 2 pi / n in the plane and its image cone.
std::string sector_svg(const ExperimentConfig& config);
/// Stem plot of energy_probabilities for the configured state.
std::string spectrum_svg(const ExperimentConfig& config);

/// Figure names accepted by render_figures.
const std::vector<std::string>& figure_names();

/// Parses "a,b,c" or "all" into figure names; throws on unknown names.
std::vector<std::string> parse_figure_list(std::string_view list);

/// Writes <dir>/<name>.svg for each name, returning the paths in order.
std::vector<std::filesystem::path> render_figures(const ExperimentConfig& config,
                                                  const std::vector<std::string>& which,
                                                  const std::filesystem::path& dir);

}  // namespace oscillator::harness
