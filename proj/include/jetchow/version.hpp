// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace jetchow {

inline constexpr const char* engine_version = "0.1.0";

}  // namespace jetchow
