#pragma once

#include <array>
#include <cstdint>

namespace qcorr::mc {

// Cube corners 0..7: 0=(0,0,0) 1=(1,0,0) 2=(1,1,0) 3=(0,1,0)
//                    4=(0,0,1) 5=(1,0,1) 6=(1,1,1) 7=(0,1,1)
// Edges 0..11 connect corners:
//   0:{0,1} 1:{1,2} 2:{2,3} 3:{3,0} 4:{4,5} 5:{5,6}
//   6:{6,7} 7:{7,4} 8:{0,4} 9:{1,5} 10:{2,6} 11:{3,7}
inline constexpr std::array<std::array<int, 2>, 12> kEdgeCorners = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
    {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
}};

// Corner offsets (dx, dy, dz).
inline constexpr std::array<std::array<int, 3>, 8> kCornerOffset = {{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
}};

// Bit i of edge_table[caseIndex] is set iff edge i is crossed; caseIndex bit
// i is set iff corner i lies below the iso-level.
extern const std::array<uint16_t, 256> edge_table;

// Up to five triangles per case as edge-index triples, -1 terminated.
extern const std::array<std::array<int8_t, 16>, 256> tri_table;

}  // namespace qcorr::mc
