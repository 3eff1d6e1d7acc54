/*
* Copyright (C) 2026 coopsim developers
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef COOPSIM_CLI_HPP
#define COOPSIM_CLI_HPP

#include <string>
#include <vector>

namespace coopsim {

/// The coopsim command line: subcommands `run`, `sweep` and `validate`.
/// Returns the process exit code; failures print one diagnostic line to
/// stderr. Exposed as a function so tests can invoke the tool in-process.
int cli_main(int argc, const char* const* argv);

/// Convenience overload; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args);

} // namespace coopsim

#endif // COOPSIM_CLI_HPP
