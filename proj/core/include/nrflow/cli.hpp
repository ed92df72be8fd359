/*
 Copyright 2026 The nrflow Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef NRFLOW_CLI_HPP
#define NRFLOW_CLI_HPP

namespace nrflow {

// Entry point behind the `nrflow` binary: subcommands `run`, `compare`,
// `sweep-alpha`. Returns 0 on success, 1 on configuration errors, 2 when a
// simulation faults. A config file can come from --config or the
// NRFLOW_CONFIG environment variable; flags override file values.
int cli_main(int argc, const char* const* argv);

}  // namespace nrflow

#endif  // NRFLOW_CLI_HPP
