#include "setpair/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace setpair {

namespace {

std::atomic<std::size_t> g_override{0};

std::size_t default_workers() {
  if (const char* env = std::getenv("SETPAIR_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

std::size_t worker_count() {
  const std::size_t forced = g_override.load();
  return forced != 0 ? forced : default_workers();
}

void set_worker_count(std::size_t workers) { g_override.store(workers); }

void parallel_for_chunks(
    std::uint64_t total, std::uint64_t chunk_size,
    const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  if (total == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  const std::size_t workers = std::min(worker_count(), chunks);

  auto run_chunk = [&](std::size_t c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
    body(c, begin, std::min(total, begin + chunk_size));
  };

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_chunk = chunks;

  auto worker = [&] {
    for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      try {
        run_chunk(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (c < error_chunk) {
          error_chunk = c;
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace setpair
