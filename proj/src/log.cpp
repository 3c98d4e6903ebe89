// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/log.hpp"

#include <cstdlib>
#include <memory>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace astchunk {

spdlog::logger& logger() {
  static const std::shared_ptr<spdlog::logger> instance = [] {
    auto sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
    auto log = std::make_shared<spdlog::logger>("astchunk", sink);
    log->set_pattern("astchunk: %l: %v");
    log->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("ASTCHUNK_LOG")) {
      log->set_level(spdlog::level::from_str(env));
    }
    return log;
  }();
  return *instance;
}

}  // namespace astchunk
