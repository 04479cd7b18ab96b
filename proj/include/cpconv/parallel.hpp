#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "cpconv/arith.hpp"

namespace cpconv {

/// Evaluates fn(n) for lo <= n <= hi on up to `jobs` threads. Results are
/// returned in n order regardless of completion order; the first exception
/// thrown by any worker is rethrown.
template <typename Fn>
auto map_range(Natural lo, Natural hi, unsigned jobs, Fn&& fn) {
    using Result = decltype(fn(lo));
    std::vector<Result> out(hi >= lo ? hi - lo + 1 : 0);
    if (out.empty()) return out;
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(out.size()));
    if (jobs == 1) {
        for (Natural n = lo; n <= hi; ++n) out[n - lo] = fn(n);
        return out;
    }
    std::atomic<Natural> next{lo};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (Natural n = next++; n <= hi; n = next++) out[n - lo] = fn(n);
            } catch (...) {
                errors[w] = std::current_exception();
                next = hi + 1;
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

} // namespace cpconv
