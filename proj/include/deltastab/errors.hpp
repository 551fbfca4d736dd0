// Copyright 2026 The deltastab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace deltastab {

/// Malformed diagram text or state/coefficient document.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A requested size exceeds a configured cap (enumeration, dense matrices).
class ResourceLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Bitstring is not a balanced 0/1 word with every prefix having #0 >= #1.
class NotDyckWord : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The state does not lie in the zero-angular-momentum subspace. `witness`
/// holds the offending multi-index as a bitstring when one is known.
class NotInVDelta : public std::runtime_error {
   public:
    NotInVDelta(const std::string &what, std::string witness = {})
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::string &witness() const noexcept { return witness_; }

   private:
    std::string witness_;
};

/// The combinatorial connectivity test and the numerical stabilizer
/// dimension disagree.
class ConsistencyViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An operation was called outside its documented domain.
class PreconditionViolation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace deltastab
