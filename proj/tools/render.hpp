// Copyright 2026 The deltastab Authors
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

#include <string>

#include "deltastab/chordkit.hpp"

namespace deltastab::cli {

/// 2m points evenly spaced on a circle, label 1 at the top and increasing
/// clockwise, joined by straight chords.
std::string render_svg(const PairPartition &p);

/// One line per chord listing the chords it crosses, then a summary line.
std::string render_ascii(const PairPartition &p);

}  // namespace deltastab::cli
