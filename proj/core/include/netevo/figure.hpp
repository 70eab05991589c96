// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "netevo/io.hpp"

namespace netevo {

/// Grouped bar chart of the value-to-weight ratio at the maximum pressure
/// present in `rows`: one group per network, one bar per tolerance.
/// Self-contained static SVG, byte-deterministic for identical input.
/// Missing (network, tolerance) cells are reported through `warnings`;
/// an empty row set raises DataError.
std::string render_figure_svg(const std::vector<ResultRow>& rows,
                              std::vector<std::string>* warnings = nullptr);

std::vector<std::string> emit_figure(const std::vector<ResultRow>& rows,
                                     const std::string& path);

}  // namespace netevo
