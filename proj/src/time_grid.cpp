#include "mkv/time_grid.hpp"

#include <cmath>

#include "mkv/errors.hpp"

namespace mkv {

TimeGrid TimeGrid::make(double T, int M) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("TimeGrid: horizon must be positive");
    if (M < 1) throw DomainError("TimeGrid: steps must be >= 1");
    TimeGrid g;
    g.horizon = T;
    g.steps = M;
    g.h = T / M;
    return g;
}

}  // namespace mkv
