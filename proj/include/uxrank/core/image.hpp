// Copyright 2026 The uxrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string_view>

#include "uxrank/core/model.hpp"

namespace uxrank {

struct ImageInfo {
  MediaType media_type;
  unsigned width = 0;
  unsigned height = 0;
};

/// Identifies a PNG, JPEG or WebP payload from its container header and
/// reads its pixel dimensions. Returns nullopt for anything that is not a
/// structurally valid image of one of those formats.
std::optional<ImageInfo> inspect_image(std::string_view bytes);

}  // namespace uxrank
