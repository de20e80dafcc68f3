#pragma once

#include <coroutine>
#include <exception>
#include <iterator>
#include <utility>
#include <vector>

namespace mcut {

// Minimal lazy generator. Values are produced on demand, so a consumer that
// stops early never pays for the rest of the enumeration.
template <typename T>
class Generator {
 public:
  struct promise_type {
    const T* current = nullptr;
    std::exception_ptr error;

    Generator get_return_object() {
      return Generator{std::coroutine_handle<promise_type>::from_promise(*this)};
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(const T& value) noexcept {
      current = std::addressof(value);
      return {};
    }
    void return_void() noexcept {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  using handle_type = std::coroutine_handle<promise_type>;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    iterator() = default;
    explicit iterator(handle_type h) : h_(h) {}

    reference operator*() const { return *h_.promise().current; }
    pointer operator->() const { return h_.promise().current; }
    iterator& operator++() {
      advance(h_);
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !h_ || h_.done(); }

   private:
    handle_type h_;
  };

  Generator() = default;
  explicit Generator(handle_type h) : h_(h) {}
  Generator(Generator&& other) noexcept : h_(std::exchange(other.h_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      if (h_) h_.destroy();
      h_ = std::exchange(other.h_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() {
    if (h_) h_.destroy();
  }

  iterator begin() {
    if (h_ && !started_) {
      started_ = true;
      advance(h_);
    }
    return iterator{h_};
  }
  std::default_sentinel_t end() const { return {}; }

  std::vector<T> collect() {
    std::vector<T> out;
    for (const T& v : *this) out.push_back(v);
    return out;
  }

 private:
  static void advance(handle_type h) {
    h.resume();
    if (h.promise().error) std::rethrow_exception(h.promise().error);
  }

  handle_type h_;
  bool started_ = false;
};

}  // namespace mcut
