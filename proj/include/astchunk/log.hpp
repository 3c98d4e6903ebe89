// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <spdlog/logger.h>

namespace astchunk {

/// Shared stderr logger. Level comes from ASTCHUNK_LOG
/// (trace, debug, info, warn, error, off); default warn.
spdlog::logger& logger();

}  // namespace astchunk
