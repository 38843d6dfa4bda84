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

#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "circulant/errors.hpp"

namespace circulant {

/// A relabeling of Z_n: vertex x goes to image()[x].
class VertexPermutation {
 public:
  static VertexPermutation identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return VertexPermutation(std::move(image));
  }

  // Throws RangeError unless `image` is a bijection on [0, image.size()).
  explicit VertexPermutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (const int v : image_) {
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[v]) {
        throw RangeError("vertex map is not a bijection");
      }
      hit[v] = true;
    }
  }

  int order() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  std::span<const int> image() const noexcept { return image_; }

  VertexPermutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = static_cast<int>(x);
    return VertexPermutation(std::move(inv));
  }

  // (a.then(b))(x) == b(a(x))
  VertexPermutation then(const VertexPermutation& next) const {
    std::vector<int> out(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) out[x] = next(image_[x]);
    return VertexPermutation(std::move(out));
  }

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace circulant
