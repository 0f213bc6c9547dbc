#pragma once

#include <cstddef>

namespace almostchar {

enum class OutputFormat { Json, Csv, Plain };

struct Config {
  int max_rank = 20;
  int workers = 1;
  OutputFormat format = OutputFormat::Json;
  std::size_t memo_budget = 20'000'000;  // approximate entry cap per evaluator, 0 = none
  bool timing = true;                     // include "ms" in reports

  /// Workers from ALMOSTCHAR_WORKERS, else hardware concurrency.
  static Config from_environment();
};

/// Throws ResourceGuard when n exceeds cfg.max_rank.
void check_rank_guard(int n, const Config& cfg);

}  // namespace almostchar
