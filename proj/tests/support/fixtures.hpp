#pragma once

#include "fano3/matrix.hpp"

namespace fixtures {

using fano3::IntMatrix;

// Vertex matrices of fan polytopes that appear throughout the tests.

inline IntMatrix p3_simplex() {
  return IntMatrix{{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
}

inline IntMatrix octahedron() {
  return IntMatrix{{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}};
}

inline IntMatrix cube() {
  return IntMatrix{{1, 1, 1, 1, -1, -1, -1, -1},
                   {1, 1, -1, -1, 1, 1, -1, -1},
                   {1, -1, 1, -1, 1, -1, 1, -1}};
}

// Newton polytope of f1 = xyz + x + y + z + 1/x + 1/y + 1/z.
inline IntMatrix f1_polytope() {
  return IntMatrix{{1, 1, 0, 0, -1, 0, 0},
                   {1, 0, 1, 0, 0, -1, 0},
                   {1, 0, 0, 1, 0, 0, -1}};
}

// Worked nodal examples with (rho, r, deg, b) = (2, 1, 30, 0).
inline IntMatrix case46() {
  return IntMatrix{{1, 0, 0, 0, 0, -1, 1, 1, -1},
                   {0, 1, 0, 0, -1, 0, 1, 0, -1},
                   {0, 0, 1, -1, 0, 0, 0, -1, 1}};
}

inline IntMatrix case47() {
  return IntMatrix{{1, 0, 0, 0, 0, -1, 0, -1, -1, -1},
                   {0, 1, 0, 0, -1, 0, 1, 1, 0, -1},
                   {0, 0, 1, -1, 0, 0, -1, 0, 1, 1}};
}

inline IntMatrix case48() {
  return IntMatrix{{1, 0, 0, -1, 0, -1, 1, 0, 1},
                   {0, 1, -1, 0, 0, 1, 1, -1, 0},
                   {0, 0, 0, 0, 1, 0, -1, 1, -1}};
}

}  // namespace fixtures
