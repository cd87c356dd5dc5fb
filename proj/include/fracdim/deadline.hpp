/*
Copyright 2026 The fracdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace fracdim {

using Seconds = std::chrono::duration<double>;

inline constexpr Seconds kDefaultTimeLimit{600.0};

/// Thrown inside searches when the deadline passes; solvers catch it and
/// report their current bounds.
struct SearchTimeout {};

/// Cooperative wall-clock limit. tick() is cheap enough to call at every
/// search node: the clock is only read every 256 calls.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() : end_(Clock::time_point::max()) {}
    explicit Deadline(Seconds limit) : end_(limit_to_end(limit)) {}

    static Deadline unlimited() { return Deadline(); }

    bool expired() const { return Clock::now() >= end_; }

    void tick() {
        if ((++calls_ & 0xFF) == 0 && expired()) throw SearchTimeout{};
    }

private:
    static Clock::time_point limit_to_end(Seconds limit) {
        if (limit.count() >= 1e9) return Clock::time_point::max();
        return Clock::now() + std::chrono::duration_cast<Clock::duration>(limit);
    }

    Clock::time_point end_;
    std::uint64_t calls_ = 0;
};

/// Milliseconds elapsed since construction.
class Stopwatch {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace fracdim
