// Copyright 2026 The Authors.
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

#ifndef MOBCACHE_ERRORS_H_
#define MOBCACHE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace mobcache {

// Thrown by the enumeration oracles when the requested instance is larger
// than the fixed enumeration cap. Callers should fall back to the fast path.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration field is outside its admissible range.
class InvalidConfig : public std::domain_error {
 public:
  InvalidConfig(std::string field, const std::string& what)
      : std::domain_error("field '" + field + "': " + what),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace mobcache

#endif  // MOBCACHE_ERRORS_H_
