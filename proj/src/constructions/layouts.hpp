/*
   Copyright 2026 The odtool Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ODTOOL_SRC_LAYOUTS_HPP
#define ODTOOL_SRC_LAYOUTS_HPP

#include <string_view>
#include <vector>

namespace odtool::detail {

extern const std::vector<std::string_view> kEightM1;
extern const std::vector<std::string_view> kEightM2;
extern const std::vector<std::string_view> kEightN;
extern const std::vector<std::string_view> kTwelveM1;
extern const std::vector<std::string_view> kTwelveM2;
extern const std::vector<std::string_view> kTwelveN;

}  // namespace odtool::detail

#endif
