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

#include "layouts.hpp"

namespace odtool::detail {

// Each row lists block tokens: 0, X or -X with X one of A..G (A is A_i in N_i).

const std::vector<std::string_view> kEightM1 = {
    "0 D B C 0 0 0 0",  "-D 0 -C B 0 0 0 0", "B -C 0 D 0 0 0 0", "C B -D 0 0 0 0 0",
    "0 0 0 0 0 -D B C", "0 0 0 0 D 0 -C B",  "0 0 0 0 B -C 0 -D", "0 0 0 0 C B D 0",
};

const std::vector<std::string_view> kEightM2 = {
    "0 G E F 0 0 0 0",  "-G 0 F -E 0 0 0 0", "E F 0 -G 0 0 0 0", "F -E G 0 0 0 0 0",
    "0 0 0 0 0 -E F G", "0 0 0 0 E 0 G -F",  "0 0 0 0 F G 0 E",  "0 0 0 0 G -F -E 0",
};

const std::vector<std::string_view> kEightN = {
    "A 0 0 0 A -A A A",      "0 A 0 0 A A A -A",     "0 0 -A 0 -A -A A -A",  "0 0 0 -A -A A A A",
    "-A -A -A -A A 0 0 0",   "A -A -A A 0 A 0 0",    "A A -A -A 0 0 -A 0",   "A -A A -A 0 0 0 -A",
};

const std::vector<std::string_view> kTwelveM1 = {
    "B C D 0 0 0 0 0 0 0 0 0",   "-C B 0 -D 0 0 0 0 0 0 0 0", "-D 0 B C 0 0 0 0 0 0 0 0",
    "0 D -C B 0 0 0 0 0 0 0 0",  "0 0 0 0 B C D 0 0 0 0 0",   "0 0 0 0 -C B 0 -D 0 0 0 0",
    "0 0 0 0 -D 0 B C 0 0 0 0",  "0 0 0 0 0 D -C B 0 0 0 0",  "0 0 0 0 0 0 0 0 B C D 0",
    "0 0 0 0 0 0 0 0 -C B 0 -D", "0 0 0 0 0 0 0 0 -D 0 B C",  "0 0 0 0 0 0 0 0 0 D -C B",
};

const std::vector<std::string_view> kTwelveM2 = {
    "E F G 0 0 0 0 0 0 0 0 0",    "F -E 0 -G 0 0 0 0 0 0 0 0",  "G 0 -E F 0 0 0 0 0 0 0 0",
    "0 -G F E 0 0 0 0 0 0 0 0",   "0 0 0 0 F G E 0 0 0 0 0",    "0 0 0 0 G -F 0 -E 0 0 0 0",
    "0 0 0 0 E 0 -F G 0 0 0 0",   "0 0 0 0 0 -E G F 0 0 0 0",   "0 0 0 0 0 0 0 0 G -E -F 0",
    "0 0 0 0 0 0 0 0 -E -G 0 F",  "0 0 0 0 0 0 0 0 -F 0 -G -E", "0 0 0 0 0 0 0 0 0 F -E G",
};

const std::vector<std::string_view> kTwelveN = {
    "0 0 0 -A A A A -A A -A A -A",     "0 0 -A 0 A -A -A -A -A -A -A -A",
    "0 A 0 0 A A -A A A A -A -A",      "A 0 0 0 A -A A A A -A -A A",
    "-A -A -A -A 0 0 0 -A A A -A A",   "-A A -A A 0 0 -A 0 A -A A A",
    "-A A A -A 0 A 0 0 -A -A -A A",    "A A -A -A A 0 0 0 -A A A A",
    "-A A -A -A -A -A A A 0 0 0 -A",   "A A -A A -A A A -A 0 0 -A 0",
    "-A A A A A -A A -A 0 A 0 0",      "A A A -A -A -A -A -A A 0 0 0",
};

}  // namespace odtool::detail
