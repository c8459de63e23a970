#ifndef UHP_TOOLS_REPORT_HPP_
#define UHP_TOOLS_REPORT_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace uhp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 2;
inline constexpr int kNotConverged = 3;
inline constexpr int kIo = 4;

/// An iterative solver stopped before meeting its tolerance.
class NotConverged : public std::runtime_error {
 public:
  NotConverged(const std::string& what, nlohmann::ordered_json details)
      : std::runtime_error(what), details(std::move(details)) {}
  nlohmann::ordered_json details;
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string commit_id();

/// Hash of the command, its input bytes and its effective settings, stamped
/// with the build commit.
std::string config_hash(const std::string& command, const std::string& input,
                        const std::map<std::string, std::string>& settings);

/// Adds config, config_hash and commit to a summary.
void stamp(nlohmann::ordered_json& summary, const std::string& command, const std::string& input,
           const std::map<std::string, std::string>& settings);

}  // namespace uhp::cli

#endif  // UHP_TOOLS_REPORT_HPP_
