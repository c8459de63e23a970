#include "report.hpp"

#include <cstdio>

#ifndef UHP_GIT_COMMIT
#define UHP_GIT_COMMIT "unknown"
#endif

namespace uhp::cli {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string commit_id() { return UHP_GIT_COMMIT; }

std::string config_hash(const std::string& command, const std::string& input,
                        const std::map<std::string, std::string>& settings) {
  std::string canon = command + '\n' + commit_id() + '\n';
  for (const auto& [k, v] : settings) canon += k + '=' + v + '\n';
  std::uint64_t h = fnv1a(canon);
  h = fnv1a(input, h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void stamp(nlohmann::ordered_json& summary, const std::string& command, const std::string& input,
           const std::map<std::string, std::string>& settings) {
  summary["config"] = settings;
  summary["config_hash"] = config_hash(command, input, settings);
  summary["commit"] = commit_id();
}

}  // namespace uhp::cli
