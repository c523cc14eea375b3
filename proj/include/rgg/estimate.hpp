#pragma once

#include <cstdint>

namespace rgg {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

}  // namespace rgg
