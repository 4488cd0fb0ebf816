//
// Copyright 2026 The codemix Authors
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

#ifndef CODEMIX_ERROR_H_
#define CODEMIX_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace codemix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-format error tied to a location in a text file.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, uint64_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what),
        path_(path),
        line_(line) {}

  const std::string& path() const { return path_; }
  uint64_t line() const { return line_; }

 private:
  std::string path_;
  uint64_t line_;
};

}  // namespace codemix

#endif  // CODEMIX_ERROR_H_
