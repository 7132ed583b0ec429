// Copyright 2026 The opqec Authors
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

#ifndef OPQEC_ERRORS_HPP_
#define OPQEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace opqec {

/// A configuration file, code definition, circuit file, or command-line
/// parameter is malformed or inconsistent.  The command line tool maps this
/// to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A conformance or acceptance check evaluated to false.  The command line
/// tool maps this to exit code 3.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opqec

#endif  // OPQEC_ERRORS_HPP_
