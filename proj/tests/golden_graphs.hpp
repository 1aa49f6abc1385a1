#pragma once

// Fixture graphs shared by the golden tests and the acceptance suite.

#include "graphforge/task.hpp"

namespace graphforge::golden {

inline Graph cycle_example() {
  // 10 nodes; a cycle through 0-1-2-9 exists
  std::vector<Edge> e{{0, 1}, {0, 4}, {0, 7}, {0, 9}, {1, 2}, {1, 7}, {1, 9},
                      {2, 9}, {3, 5}, {3, 8}, {5, 8}, {7, 9}, {8, 9}};
  return make_graph(10, false, false, std::move(e));
}

inline Graph shortest_path_example() {
  std::vector<Edge> e{
      {0, 6, 4},   {0, 7, 6},   {0, 12, 1},  {0, 20, 1},  {0, 21, 8},  {1, 3, 9},
      {1, 4, 3},   {1, 12, 7},  {1, 15, 2},  {1, 17, 10}, {1, 20, 4},  {2, 9, 9},
      {2, 10, 10}, {2, 11, 1},  {2, 17, 4},  {3, 12, 7},  {3, 13, 9},  {3, 17, 1},
      {3, 18, 6},  {3, 19, 3},  {3, 20, 5},  {4, 5, 9},   {4, 12, 7},  {4, 21, 9},
      {5, 8, 7},   {5, 11, 8},  {5, 19, 7},  {6, 13, 9},  {6, 17, 7},  {7, 10, 8},
      {7, 14, 10}, {7, 16, 4},  {7, 19, 8},  {8, 14, 10}, {8, 18, 10}, {8, 19, 8},
      {10, 12, 2}, {10, 18, 5}, {11, 18, 9}, {11, 20, 8}, {11, 21, 2}, {12, 17, 10},
      {12, 20, 2}, {13, 17, 5}, {15, 18, 9}, {15, 20, 10}, {16, 17, 4}, {16, 20, 3},
      {18, 20, 8}, {19, 21, 2}};
  return make_graph(22, false, true, std::move(e));
}

inline Graph bipartite_example() {
  std::vector<Edge> e{
      {0, 4},   {0, 7},   {0, 8},   {0, 10},  {0, 15},  {0, 19},  {0, 21},  {1, 2},
      {1, 5},   {1, 8},   {1, 10},  {1, 13},  {1, 16},  {1, 19},  {1, 21},  {2, 5},
      {2, 13},  {2, 14},  {2, 20},  {3, 4},   {3, 6},   {3, 10},  {3, 12},  {3, 14},
      {3, 16},  {3, 18},  {3, 21},  {4, 10},  {4, 16},  {4, 21},  {5, 11},  {5, 12},
      {5, 13},  {5, 15},  {5, 16},  {5, 18},  {6, 7},   {6, 11},  {6, 12},  {6, 13},
      {6, 14},  {7, 8},   {7, 11},  {7, 14},  {7, 16},  {7, 17},  {7, 20},  {7, 21},
      {8, 14},  {8, 15},  {8, 19},  {8, 20},  {8, 21},  {9, 12},  {9, 14},  {9, 15},
      {9, 18},  {10, 12}, {10, 16}, {11, 12}, {11, 15}, {11, 16}, {11, 20}, {12, 15},
      {12, 21}, {13, 14}, {13, 15}, {13, 19}, {13, 20}, {13, 21}, {14, 16}, {14, 20},
      {14, 21}, {15, 17}, {15, 20}, {15, 21}};
  return make_graph(22, false, false, std::move(e));
}

inline Graph matching_example() {
  // star: 0 adjacent to 1, 2, 3; left partition {0}
  return make_graph(4, false, false, {{0, 1}, {0, 2}, {0, 3}});
}

inline Graph flow_example() {
  return make_graph(7, true, true,
                    {{0, 6, 5}, {1, 6, 5}, {2, 3, 7}, {3, 4, 8}, {3, 6, 10}, {4, 5, 2}});
}

// Collaboration network: 0 Mark S. Daskin, 1 Zuo-Jun Max Shen,
// 2 James F. Campbell, 3 Mercedes Landete, 4 Javier Alcaraz, 5 Juan F. Monge,
// 6 Alfredo Marin, 7 Jose L. Sainz-Pardo.
inline Graph clique_example() {
  std::vector<Edge> e{{0, 1}, {0, 3}, {0, 5}, {0, 7}, {1, 3}, {1, 5}, {1, 7},
                      {2, 6}, {2, 3}, {3, 6}, {3, 4}, {3, 5}, {3, 7}, {4, 6},
                      {4, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  return make_graph(8, false, false, std::move(e));
}

inline std::vector<std::string> clique_names() {
  return {"Mark S. Daskin",  "Zuo-Jun Max Shen", "James F. Campbell", "Mercedes Landete",
          "Javier Alcaraz",  "Juan F. Monge",    "Alfredo Marin",     "Jose L. Sainz-Pardo"};
}

// Knowledge graph: 0 Time in Chile, 1 Peugeot 505, 2 Canada, 3 Renault 12,
// 4 Los Andes Chile, 5 Renault 18, 6 Isla de Maipo, 7 Santa Isabel Cordoba.
inline Graph diameter_example() {
  std::vector<Edge> e{{0, 4}, {0, 6}, {1, 4}, {2, 3}, {3, 4}, {3, 7}, {3, 5}, {4, 5}, {5, 7}};
  return make_graph(8, false, false, std::move(e));
}

inline std::vector<std::string> diameter_names() {
  return {"Time in Chile", "Peugeot 505",  "Canada",        "Renault 12",
          "Los Andes Chile", "Renault 18", "Isla de Maipo", "Santa Isabel Cordoba"};
}

}  // namespace graphforge::golden
