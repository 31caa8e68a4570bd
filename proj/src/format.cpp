// Copyright 2026 The shirksim Authors
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

#include "shirksim/format.hpp"

#include <fmt/format.h>

namespace shirksim {

std::string fmt_num(double v) {
  // Avoid "-0" diffs between platforms.
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.12g}", v);
}

}  // namespace shirksim
