// Copyright 2026 The dicke-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "sweep.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dicke::cli {

struct FigureRecipe {
    std::string id;
    std::string description;
    SweepConfig config;
};

[[nodiscard]] const std::vector<FigureRecipe> &figure_recipes();

/// Throws usage_error for an unknown id.
[[nodiscard]] SweepConfig figure_recipe(std::string_view id);

} // namespace dicke::cli
