#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qlp {

// QLP_THREADS, else hardware concurrency; invalid values are an error
inline unsigned thread_count() {
  const char* env = std::getenv("QLP_THREADS");
  if (env && *env) {
    std::string s(env);
    for (char c : s)
      if (c < '0' || c > '9') throw std::invalid_argument("QLP_THREADS must be a positive integer, got '" + s + "'");
    unsigned long v = std::stoul(s);
    if (v == 0 || v > 1024) throw std::invalid_argument("QLP_THREADS must be in 1..1024, got '" + s + "'");
    return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

// out[i] = f(i), results in index order; first exception is rethrown
template <class F>
auto parallel_map(size_t count, F&& f, unsigned threads = thread_count()) -> std::vector<decltype(f(size_t{}))> {
  using R = decltype(f(size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (size_t i; !failed && (i = next++) < count;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    }
  };
  unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (t <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace qlp
