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

#ifndef ODTOOL_CLI_HPP
#define ODTOOL_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "odtool/matrix.hpp"

namespace odtool {

class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A design matrix as stored on disk: order, declared variables, entries.
struct MatrixFile {
    PolyMatrix matrix;
    /// Variables in header order.
    std::vector<VarId> vars;
};

/// Header `od <n> vars <names...>`, then n rows of n whitespace-separated
/// entries. Entries are `0` or `+`-joined terms `v`, `-v`, `k*v`.
/// Throws std::invalid_argument if an entry is not an integer linear form
/// in `vars`.
std::string serialize_matrix(const PolyMatrix& m, std::span<const VarId> vars, const VarRegistry& reg);

/// Inverse of serialize_matrix. Variables are interned into `reg` by name.
/// Throws ParseError with a line number on malformed input.
MatrixFile parse_matrix(std::string_view text, VarRegistry& reg);

MatrixFile read_matrix_file(const std::string& path, VarRegistry& reg);

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kFail = 1, kUndecided = 2, kUsage = 3 };

/// Runs odtool with argv[0] as the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace odtool

#endif
