// SPDX-License-Identifier: Apache-2.0
//
// cachecast - linear-subpacketization coded caching for multi-antenna broadcast
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace cachecast {

// Base of everything the library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Caller-supplied input is malformed. The CLI maps these to exit code 2.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class InfeasibleParams : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class InapplicableParams : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class InvalidPlacement : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class UserOutOfRange : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class OutOfDomain : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class DuplicateDemand : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

// Internal consistency failures: the DP family, placement or schedule
// handed to an algorithm do not fit together.
class ZfSetSizeViolation : public Error {
  public:
    using Error::Error;
};

class SubpartOverflow : public Error {
  public:
    using Error::Error;
};

class DegenerateChannel : public Error {
  public:
    using Error::Error;
};

class MissingCacheEntry : public Error {
  public:
    using Error::Error;
};

} // namespace cachecast
