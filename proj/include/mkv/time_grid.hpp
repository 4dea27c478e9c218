#pragma once

namespace mkv {

// Uniform grid t_m = m*h, m = 0..M, with h = T/M.
struct TimeGrid {
    double horizon = 1.0;
    int steps = 1;
    double h = 1.0;

    static TimeGrid make(double T, int M);
    double node(int m) const { return h * m; }
};

}  // namespace mkv
