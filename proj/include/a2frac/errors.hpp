// Copyright 2026 The a2frac Authors
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

#ifndef A2FRAC_ERRORS_HPP
#define A2FRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace a2frac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& what) : Error(what) {}
};

struct EmptyWord : Error {
  EmptyWord() : Error("operation requires a non-empty digit word") {}
};

struct NoPredecessor : Error {
  NoPredecessor() : Error("level-0 state has no predecessor ratio") {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct BadInterval : Error {
  explicit BadInterval(const std::string& what) : Error(what) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

struct InvalidProbability : Error {
  explicit InvalidProbability(const std::string& what) : Error(what) {}
};

struct NotDiscrete : Error {
  NotDiscrete() : Error("schedule does not define a discrete distribution") {}
};

struct BadDepth : Error {
  explicit BadDepth(const std::string& what) : Error(what) {}
};

struct ZeroProbabilityOnPath : Error {
  explicit ZeroProbabilityOnPath(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace a2frac

#endif  // A2FRAC_ERRORS_HPP
