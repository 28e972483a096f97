#pragma once

#include <array>

// The published table of the first 200 Neumann index pairs of the unit
// equilateral triangle: full-spectrum pairs (m,n) and symmetric pairs [m,n],
// reading across rows.  Entry j = 190 of the full list is a known misprint:
// the sorted sequence requires (13,6) with lattice norm 283, but the table
// prints (13,16).  Comparisons should diff tie blocks as multisets and
// expect exactly that one discrepancy.
namespace trieig::data {

struct IndexPair { int m, n; };

inline constexpr std::array<IndexPair, 200> kPublishedFullPairs = {{
    {0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {0, 3}, {3, 0},
    {2, 2}, {1, 3}, {3, 1}, {0, 4}, {4, 0}, {2, 3}, {3, 2}, {1, 4}, {4, 1}, {0, 5},
    {5, 0}, {3, 3}, {2, 4}, {4, 2}, {1, 5}, {5, 1}, {0, 6}, {6, 0}, {3, 4}, {4, 3},
    {2, 5}, {5, 2}, {1, 6}, {6, 1}, {4, 4}, {0, 7}, {3, 5}, {5, 3}, {7, 0}, {2, 6},
    {6, 2}, {1, 7}, {7, 1}, {4, 5}, {5, 4}, {3, 6}, {6, 3}, {0, 8}, {8, 0}, {2, 7},
    {7, 2}, {1, 8}, {8, 1}, {5, 5}, {4, 6}, {6, 4}, {3, 7}, {7, 3}, {0, 9}, {9, 0},
    {2, 8}, {8, 2}, {1, 9}, {5, 6}, {6, 5}, {9, 1}, {4, 7}, {7, 4}, {3, 8}, {8, 3},
    {0, 10}, {10, 0}, {2, 9}, {9, 2}, {6, 6}, {5, 7}, {7, 5}, {1, 10}, {10, 1}, {4, 8},
    {8, 4}, {3, 9}, {9, 3}, {0, 11}, {11, 0}, {2, 10}, {10, 2}, {6, 7}, {7, 6}, {5, 8},
    {8, 5}, {1, 11}, {4, 9}, {9, 4}, {11, 1}, {3, 10}, {10, 3}, {0, 12}, {12, 0}, {2, 11},
    {7, 7}, {11, 2}, {6, 8}, {8, 6}, {5, 9}, {9, 5}, {4, 10}, {10, 4}, {1, 12}, {12, 1},
    {3, 11}, {11, 3}, {0, 13}, {7, 8}, {8, 7}, {13, 0}, {6, 9}, {9, 6}, {2, 12}, {12, 2},
    {5, 10}, {10, 5}, {4, 11}, {11, 4}, {1, 13}, {13, 1}, {3, 12}, {12, 3}, {8, 8}, {7, 9},
    {9, 7}, {0, 14}, {6, 10}, {10, 6}, {14, 0}, {2, 13}, {13, 2}, {5, 11}, {11, 5}, {4, 12},
    {12, 4}, {1, 14}, {14, 1}, {3, 13}, {8, 9}, {9, 8}, {13, 3}, {7, 10}, {10, 7}, {6, 11},
    {11, 6}, {0, 15}, {15, 0}, {2, 14}, {14, 2}, {5, 12}, {12, 5}, {4, 13}, {13, 4}, {1, 15},
    {15, 1}, {9, 9}, {8, 10}, {10, 8}, {3, 14}, {7, 11}, {11, 7}, {14, 3}, {6, 12}, {12, 6},
    {0, 16}, {16, 0}, {2, 15}, {5, 13}, {13, 5}, {15, 2}, {4, 14}, {14, 4}, {9, 10}, {10, 9},
    {1, 16}, {8, 11}, {11, 8}, {16, 1}, {7, 12}, {12, 7}, {3, 15}, {15, 3}, {6, 13}, {13, 16},
    {0, 17}, {17, 0}, {5, 14}, {14, 5}, {2, 16}, {16, 2}, {10, 10}, {4, 15}, {9, 11}, {11, 9}
}};

inline constexpr std::array<IndexPair, 200> kPublishedSymmetricPairs = {{
    {0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 2}, {1, 3}, {0, 4}, {2, 3},
    {1, 4}, {0, 5}, {3, 3}, {2, 4}, {1, 5}, {0, 6}, {3, 4}, {2, 5}, {1, 6}, {4, 4},
    {0, 7}, {3, 5}, {2, 6}, {1, 7}, {4, 5}, {3, 6}, {0, 8}, {2, 7}, {1, 8}, {5, 5},
    {4, 6}, {3, 7}, {0, 9}, {2, 8}, {1, 9}, {5, 6}, {4, 7}, {3, 8}, {0, 10}, {2, 9},
    {6, 6}, {5, 7}, {1, 10}, {4, 8}, {3, 9}, {0, 11}, {2, 10}, {6, 7}, {5, 8}, {1, 11},
    {4, 9}, {3, 10}, {0, 12}, {2, 11}, {7, 7}, {6, 8}, {5, 9}, {4, 10}, {1, 12}, {3, 11},
    {0, 13}, {7, 8}, {6, 9}, {2, 12}, {5, 10}, {4, 11}, {1, 13}, {3, 12}, {8, 8}, {7, 9},
    {0, 14}, {6, 10}, {2, 13}, {5, 11}, {4, 12}, {1, 14}, {3, 13}, {8, 9}, {7, 10}, {6, 11},
    {0, 15}, {2, 14}, {5, 12}, {4, 13}, {1, 15}, {9, 9}, {8, 10}, {3, 14}, {7, 11}, {6, 12},
    {0, 16}, {2, 15}, {5, 13}, {4, 14}, {9, 10}, {1, 16}, {8, 11}, {7, 12}, {3, 15}, {6, 13},
    {0, 17}, {5, 14}, {2, 16}, {10, 10}, {4, 15}, {9, 11}, {8, 12}, {1, 17}, {7, 13}, {3, 16},
    {6, 14}, {0, 18}, {5, 15}, {2, 17}, {10, 11}, {9, 12}, {4, 16}, {8, 13}, {1, 18}, {7, 14},
    {3, 17}, {6, 15}, {0, 19}, {5, 16}, {11, 11}, {2, 18}, {10, 12}, {9, 13}, {8, 14}, {4, 17},
    {7, 15}, {1, 19}, {3, 18}, {6, 16}, {11, 12}, {5, 17}, {10, 13}, {0, 20}, {2, 19}, {9, 14},
    {8, 15}, {4, 18}, {7, 16}, {1, 20}, {3, 19}, {6, 17}, {12, 12}, {11, 13}, {10, 14}, {5, 18},
    {0, 21}, {9, 15}, {2, 20}, {8, 16}, {4, 19}, {7, 17}, {1, 21}, {6, 18}, {3, 20}, {12, 13},
    {11, 14}, {10, 15}, {5, 19}, {9, 16}, {0, 22}, {2, 21}, {8, 17}, {4, 20}, {7, 18}, {1, 22},
    {13, 13}, {12, 14}, {6, 19}, {11, 15}, {3, 21}, {10, 16}, {9, 17}, {5, 20}, {0, 23}, {2, 22},
    {8, 18}, {4, 21}, {7, 19}, {13, 14}, {12, 15}, {1, 23}, {11, 16}, {6, 20}, {3, 22}, {10, 17},
    {9, 18}, {5, 21}, {0, 24}, {8, 19}, {2, 23}, {4, 22}, {14, 14}, {7, 20}, {13, 15}, {12, 16}
}};

}  // namespace trieig::data
