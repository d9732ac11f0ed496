#pragma once

#include <vector>

#include "wright/types.hpp"

namespace wright {

// Uniform 1-D grid plus sampled values.  The size must be a power of two
// (FFT convolution requirement); the grid covers
// [x_min, x_min + (n-1) dx].
struct GridFunction {
    double x_min = 0.0;
    double dx = 1.0;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(double x_min_, double dx_, std::vector<double> values_)
        : x_min(x_min_), dx(dx_), values(std::move(values_)) {
        validate();
    }

    static GridFunction zeros(double x_min_, double dx_, int n) {
        return {x_min_, dx_, std::vector<double>(static_cast<size_t>(n), 0.0)};
    }

    int n() const { return static_cast<int>(values.size()); }
    double x(int i) const { return x_min + dx * i; }

    bool same_grid(const GridFunction& other) const {
        return x_min == other.x_min && dx == other.dx && values.size() == other.values.size();
    }

    void validate() const {
        if (!(dx > 0.0)) throw domain_error("GridFunction: dx must be > 0");
        size_t m = values.size();
        if (m == 0 || (m & (m - 1)) != 0)
            throw domain_error("GridFunction: size must be a nonzero power of two");
    }
};

}  // namespace wright
