#ifndef HOSKIP_CLI_PRESETS_HPP
#define HOSKIP_CLI_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hoskip::cli {

/// Config text of a shipped preset, or nullopt for an unknown name.
std::optional<std::string> preset_text(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace hoskip::cli

#endif
