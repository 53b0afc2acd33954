// Copyright 2026 The semtopic Authors.
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

#ifndef SEMTOPIC_ERRORS_H_
#define SEMTOPIC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semtopic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input file. line() is 1-based, 0 when the error
// is not tied to a line.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A remote service could not be reached or answered with a transient
// failure. Callers may retry.
class RemoteUnavailable : public Error {
 public:
  using Error::Error;
};

// A remote service answered, but the payload could not be understood.
class MalformedResponse : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace semtopic

#endif  // SEMTOPIC_ERRORS_H_
