// Copyright 2026 The cvtele Authors
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

#ifndef CVTELE_CLI_STATE_PARSER_HPP
#define CVTELE_CLI_STATE_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cvtele/errors.hpp"
#include "cvtele/state.hpp"

namespace cvtele::cli {

/// Grammar:
///   coh:<re>[,<im>] | fock:<n> | superpos01 | vec:<c0>;<c1>;...
/// with each <ck> one of <re>, <re>+<im>i, <re>-<im>i.
struct StateExpr {
    std::string source;
    StateSpec parsed;
    std::vector<std::string> warnings;
};

/// Raised for malformed state text; carries the byte offset of the problem.
class SyntaxError : public UsageError {
   public:
    SyntaxError(std::string_view text, size_t position, const std::string& expected);
    size_t position() const { return position_; }

   private:
    size_t position_;
};

/// vec: input is normalized; a warning is recorded when its norm is off by more than 1e-6.
StateExpr parse_state(std::string_view text);

}  // namespace cvtele::cli

#endif
