/* Copyright 2026 The mhl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mhl/error.hpp"

namespace mhl {

std::string SourceSpan::to_string() const {
    std::string out = file.empty() ? "<input>" : file;
    if (!valid()) return out;
    out += ":" + std::to_string(line) + ":" + std::to_string(column);
    if (end_line > line) out += "-" + std::to_string(end_line) + ":" + std::to_string(end_column);
    else if (end_column > column) out += "-" + std::to_string(end_column);
    return out;
}

}  // namespace mhl
