// Copyright 2026 The powerlat Authors.
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

#ifndef POWERLAT_TOOLS_CLI_HPP_
#define POWERLAT_TOOLS_CLI_HPP_

#include <ostream>

namespace powerlat::cli {

// Runs one powerlat invocation. Returns 0 when the property holds or output
// was produced, 1 when a check fails (the witness is printed), 2 on usage or
// input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace powerlat::cli

#endif  // POWERLAT_TOOLS_CLI_HPP_
