#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace chowlaff {

/// Splits [0, total) into at most `workers` contiguous chunks, runs
/// `fn(lo, hi)` for each, and returns the per-chunk results in chunk
/// order. The partition is by index only, so any associative ordered
/// merge of the results is independent of the worker count.
template <typename T, typename Fn>
std::vector<T> run_chunked(std::uint64_t total, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  std::uint64_t nchunks = std::min<std::uint64_t>(workers, total ? total : 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t c = 0; c < nchunks; ++c)
    ranges.emplace_back(total * c / nchunks, total * (c + 1) / nchunks);

  std::vector<T> results(ranges.size());
  if (ranges.size() == 1) {
    results[0] = fn(ranges[0].first, ranges[0].second);
    return results;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t c = 0; c < ranges.size(); ++c)
    threads.emplace_back([&, c] {
      try {
        results[c] = fn(ranges[c].first, ranges[c].second);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace chowlaff
