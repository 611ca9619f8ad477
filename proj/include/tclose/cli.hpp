//
// Copyright 2026 The tclose Authors
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
//

#ifndef TCLOSE_CLI_HPP_
#define TCLOSE_CLI_HPP_

#include <ostream>

namespace tclose {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

// Entry point behind the `tclose` binary:
//   tclose audit --input <csv> --schema <json> [--metric k|l|t|all]
//                [--attribute NAME] [--method ...] [--order ...]
//                [--format text|json] [--precision N] [--missing error|drop]
//   tclose bench --sizes 1024,2048,... [--reps N] [--efficient-only]
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace tclose

#endif  // TCLOSE_CLI_HPP_
