#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace ddp::io {

// 17 significant digits, '.' decimal, independent of the global locale.
std::string format_double(double v);

// Writes to a sibling temporary file and renames it over `path`.
void atomic_write(const std::filesystem::path& path, std::string_view content);

std::string csv_line(const std::vector<std::string>& fields);

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// handled by exactly one worker; callers write into preallocated slots so the
// output order never depends on scheduling. Exceptions are rethrown after join.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body);

}  // namespace ddp::io

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

namespace ddp::io {

template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned k = 0; k < count; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ddp::io
