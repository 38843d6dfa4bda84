// Copyright 2026 The circulant-iso Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value reduced to 0 modulo n; 0 is not an edge offset.
class ZeroJumpError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  using Error::Error;
};

// Jump sets normalized for different orders were combined.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class FixtureParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace circulant
