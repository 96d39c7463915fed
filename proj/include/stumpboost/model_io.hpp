// Copyright 2026 The StumpBoost Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "stumpboost/adaboost.hpp"

namespace stumpboost {

// Text model format:
//
//   STUMPBOOST-MODEL v1
//   rounds <T>
//   dims <d>
//   classes <c0> <c1> ...
//   class <c> round <t> feature <f> threshold <x> polarity <+1|-1> alpha <a> error <e> bound <b>
//   ...
//
// Reals use the shortest decimal that round-trips, so parse(serialize(m)) == m.
// The constant stump's threshold is written as "-inf".

std::string serialize_model(const MultiClassModel& model);
MultiClassModel parse_model(std::string_view text);

void save_model(const MultiClassModel& model, const std::filesystem::path& path);
MultiClassModel load_model(const std::filesystem::path& path);

}  // namespace stumpboost
