#include "almostchar/config.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "almostchar/error.hpp"

namespace almostchar {

Config Config::from_environment() {
  Config cfg;
  const unsigned hw = std::thread::hardware_concurrency();
  cfg.workers = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("ALMOSTCHAR_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) cfg.workers = v;
  }
  return cfg;
}

void check_rank_guard(int n, const Config& cfg) {
  if (n > cfg.max_rank) {
    throw ResourceGuard("rank " + std::to_string(n) + " exceeds max_rank " + std::to_string(cfg.max_rank));
  }
}

}  // namespace almostchar
