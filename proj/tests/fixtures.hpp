#pragma once

// Small named graphs used across the suites. Each comment lists vertex
// names in id order.

#include "kess/graph.hpp"

namespace fixtures {

using kess::Graph;

// a b c d, triangle abc with pendant d on a
inline Graph triangle_plus_edge() { return kess::named::triangle_with_pendant(); }

// p0 p1 p2 p3 q1 q2 q3
inline Graph ke_seven() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {2, 5}, {0, 4}, {2, 6}});
}

// a b c d e
inline Graph not_ke_five() {
  return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {4, 2}});
}

// b1 b2 b3 t1 t2 t3, K4 on b2 b3 t2 t3
inline Graph k4_with_two_pendant_paths() {
  return Graph(6, {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {4, 5}, {0, 1}, {0, 3}});
}

// p4..p9 then q4 q5 q6 q8 q9
inline Graph eleven_square_stable() {
  return Graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {7, 2}, {1, 8}, {7, 8},
                    {2, 8}, {3, 9}, {0, 6}, {1, 7}, {4, 9}, {5, 10}});
}

// r10..r13 then s10 s11 s12
inline Graph seven_not_square_stable() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {5, 6}, {1, 5}, {2, 6}});
}

// v1..v8
inline Graph eight_vertex_simplicial_core() {
  return Graph(8, {{5, 6}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 5}, {1, 6},
                   {2, 7}});
}

// A B C x y z, triangle ABC with x on AB, y on C, z on AC
inline Graph six_unique_square_maximum() {
  return Graph(6, {{0, 1}, {0, 3}, {0, 5}, {2, 4}, {0, 2}, {3, 1}, {1, 2}, {5, 2}});
}

// b4..b9 then t4 t5 t8 t9
inline Graph ten_square_stable_not_ke() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {7, 2}, {3, 8}, {0, 6},
                    {1, 7}, {4, 8}, {5, 9}});
}

// a b c d e f
inline Graph very_well_covered_not_square_stable() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {4, 5}});
}

// a b c d e
inline Graph five_square_stable_not_ke() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {0, 4}});
}

// a b c d e
inline Graph five_square_stable_odd() {
  return Graph(5, {{0, 1}, {3, 4}, {1, 3}, {1, 4}, {0, 2}});
}

// comb b1..b4 / t1..t4, then a ladder piece on 8 vertices, then a 6-vertex
// piece; every component has a pendant perfect matching
inline Graph three_pendant_components() {
  Graph comb(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  Graph ladder(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {1, 5}, {2, 6}});
  Graph six(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {1, 5}, {5, 2}});
  return kess::named::disjoint_union(kess::named::disjoint_union(comb, ladder), six);
}

} // namespace fixtures
