#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace setpair {

// Worker threads used by enumeration and multi-start solves. Defaults to
// SETPAIR_THREADS if set, else std::thread::hardware_concurrency().
std::size_t worker_count();
// 0 restores the default.
void set_worker_count(std::size_t workers);

/// Runs body(chunk, begin, end) for every fixed-size chunk of [0, total).
///
/// Chunk boundaries depend only on total and chunk_size, never on the
/// worker count, so per-chunk results are reproducible. If bodies throw,
/// the exception from the lowest-numbered failing chunk is rethrown.
void parallel_for_chunks(
    std::uint64_t total, std::uint64_t chunk_size,
    const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

// Maps each chunk independently, then folds the results in chunk order.
template <class T, class Map, class Fold>
T chunked_reduce(std::uint64_t total, std::uint64_t chunk_size, T init, Map&& map,
                 Fold&& fold) {
  if (total == 0) return init;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  std::vector<std::optional<T>> parts(chunks);
  parallel_for_chunks(total, chunk_size,
                      [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
                        parts[chunk].emplace(map(begin, end));
                      });
  T acc = std::move(init);
  for (auto& part : parts) acc = fold(std::move(acc), std::move(*part));
  return acc;
}

}  // namespace setpair
