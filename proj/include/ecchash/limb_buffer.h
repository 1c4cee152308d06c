// Copyright 2026 The ecchash Authors
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

#ifndef ECCHASH_LIMB_BUFFER_H_
#define ECCHASH_LIMB_BUFFER_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>

namespace ecchash {

// Growable limb array that keeps up to kInline limbs in place. Every curve
// coordinate fits inline, so field arithmetic never touches the heap.
class LimbBuffer {
 public:
  using Limb = std::uint64_t;
  static constexpr std::size_t kInline = 10;

  LimbBuffer() = default;
  explicit LimbBuffer(std::size_t n) { resize(n); }
  LimbBuffer(const LimbBuffer& other) { assign(other.begin(), other.end()); }
  LimbBuffer(LimbBuffer&& other) noexcept { steal(other); }
  LimbBuffer& operator=(const LimbBuffer& other) {
    if (this != &other) assign(other.begin(), other.end());
    return *this;
  }
  LimbBuffer& operator=(LimbBuffer&& other) noexcept {
    if (this != &other) {
      heap_.reset();
      steal(other);
    }
    return *this;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Limb* data() noexcept { return heap_ ? heap_.get() : inline_; }
  const Limb* data() const noexcept { return heap_ ? heap_.get() : inline_; }
  Limb* begin() noexcept { return data(); }
  Limb* end() noexcept { return data() + size_; }
  const Limb* begin() const noexcept { return data(); }
  const Limb* end() const noexcept { return data() + size_; }
  Limb& operator[](std::size_t i) noexcept { return data()[i]; }
  Limb operator[](std::size_t i) const noexcept { return data()[i]; }
  Limb back() const noexcept { return data()[size_ - 1]; }
  operator std::span<const Limb>() const noexcept {  // NOLINT
    return {data(), size_};
  }

  void clear() noexcept { size_ = 0; }
  void pop_back() noexcept { --size_; }
  void push_back(Limb value) {
    reserve(size_ + 1);
    data()[size_++] = value;
  }
  // New limbs are zero.
  void resize(std::size_t n) {
    reserve(n);
    if (n > size_) std::fill(data() + size_, data() + n, Limb{0});
    size_ = n;
  }
  void assign(std::size_t n, Limb value) {
    size_ = 0;
    reserve(n);
    std::fill(data(), data() + n, value);
    size_ = n;
  }
  void assign(const Limb* first, const Limb* last) {
    const auto n = static_cast<std::size_t>(last - first);
    size_ = 0;
    reserve(n);
    std::copy(first, last, data());
    size_ = n;
  }
  void reserve(std::size_t n) {
    if (n <= capacity_) return;
    const std::size_t cap = std::max(n, 2 * capacity_);
    auto grown = std::make_unique<Limb[]>(cap);
    std::copy(data(), data() + size_, grown.get());
    heap_ = std::move(grown);
    capacity_ = cap;
  }

  friend bool operator==(const LimbBuffer& a, const LimbBuffer& b) noexcept {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  void steal(LimbBuffer& other) noexcept {
    size_ = other.size_;
    if (other.heap_) {
      heap_ = std::move(other.heap_);
      capacity_ = other.capacity_;
    } else {
      std::copy(other.inline_, other.inline_ + other.size_, inline_);
      capacity_ = kInline;
    }
    other.size_ = 0;
    other.capacity_ = kInline;
  }

  std::size_t size_ = 0;
  std::size_t capacity_ = kInline;
  std::unique_ptr<Limb[]> heap_;
  Limb inline_[kInline];
};

}  // namespace ecchash

#endif  // ECCHASH_LIMB_BUFFER_H_
