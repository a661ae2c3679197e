#ifndef LAPREP_MAPS_HPP
#define LAPREP_MAPS_HPP

#include <string>
#include <vector>

namespace laprep {

/// Built-in arena layouts. Known names: gridroom, gridmaze, pointroom,
/// pointmaze. Throws std::invalid_argument for anything else.
const std::string& builtin_map(const std::string& name);

std::vector<std::string> builtin_map_names();

bool is_point_env_name(const std::string& name);

}  // namespace laprep

#endif
