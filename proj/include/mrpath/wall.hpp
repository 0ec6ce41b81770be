#ifndef MRPATH_WALL_HPP
#define MRPATH_WALL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mrpath/framework.hpp"
#include "mrpath/graph.hpp"
#include "mrpath/treedec.hpp"

namespace mrp {

// Elementary wall position (x, y), x in 1..2h, y in 1..h.
using Pos = std::pair<int, int>;
using PosEdge = std::pair<Pos, Pos>;  // first < second

struct WallModel {
  int height = 0;
  std::map<Pos, int> branch;                    // every elementary position
  std::map<PosEdge, std::vector<int>> subdiv;   // internal path from first to second; absent = plain edge
  bool operator==(const WallModel&) const = default;
};

std::vector<Pos> wall_positions(int h);
std::vector<PosEdge> wall_edges(int h);
int elementary_degree(int h, Pos p);
// Layer i (1-based) as a cyclic position sequence, and the positions of W^(i).
const std::vector<std::vector<Pos>>& wall_layer_positions(int h);
const std::vector<std::vector<Pos>>& wall_inner_positions(int h);
int layer_count(int h);

struct BuiltWall {
  Graph graph;
  WallModel wall;
};

// Ids are assigned row by row (y, then x), starting at first_id.
BuiltWall build_elementary_wall(int h, int first_id = 0);
// scheme maps an elementary edge to the number of vertices inserted on it; new ids follow g.id_bound().
BuiltWall subdivide_wall(const Graph& g, const WallModel& w, const std::map<PosEdge, int>& scheme);
std::map<PosEdge, int> random_subdivision_scheme(int h, int max_extra, std::uint64_t seed);

std::vector<std::string> validate_wall(const Graph& g, const WallModel& w);

std::vector<int> wall_vertices(const WallModel& w);
// Host vertices of the realized layer L_i, in cyclic order.
std::vector<int> layer_cycle(const WallModel& w, int i);
// Host vertices of W^(i).
std::vector<int> inner_wall_vertices(const WallModel& w, int i);
// V(perim(W^(i))) plus every component of g - perim that meets W^(i) - perim. Sorted.
std::vector<int> compass_of(const Graph& g, const WallModel& w, int i = 1);
int rho(const Framework& f, const WallModel& w, int i = 1);

// Subwall of height q in the box with lower-left corner (x0, y0). When x0 + y0 is odd the
// brick pattern is reflected left to right, which is how the inner walls W^(i) sit.
Pos subwall_position(int x0, int y0, int q, Pos p);
WallModel subwall(const WallModel& w, int x0, int y0, int q);
bool subwall_fits(int h, int x0, int y0, int q);
// Smallest host id among degree-3 branch positions of the innermost layer.
int central_vertex(const WallModel& w);

struct WallPacking {
  int z = 0, r = 0, q = 0;
  WallModel w0;
  std::vector<WallModel> walls;  // W_1..W_r
};

struct PackingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long packing_f(int k, int z, int r, int q);
int ceil_sqrt(int r);
WallPacking grid_packing(const WallModel& w, int z, int r, int q);
// Empty means valid.
std::vector<std::string> validate_packing(const Graph& g, const WallPacking& p);
WallPacking equal_rank_packing(const Framework& f, const WallModel& w, int k, int z, int x, int q);

struct FindWallResult {
  enum class Kind { wall, decomposition, incomplete };
  Kind kind = Kind::incomplete;
  WallModel wall;
  TreeDecomposition td;
  std::string reason;
};

// First height-q subwall of w (row-major anchors, w itself first) that is valid in g and whose
// compass misses every vertex of avoid.
std::optional<WallModel> find_subwall(const Graph& g, const WallModel& w, int q, const std::vector<int>& avoid);
// Reads g as a rectangular grid if it is one, and cuts out the largest odd wall.
std::optional<WallModel> wall_from_grid(const Graph& g);
// Tries the certificate, then a decomposition of width <= 9q, then grid recognition.
FindWallResult find_wall(const Graph& g, int q, const std::optional<WallModel>& certificate = std::nullopt,
                         const std::vector<int>& avoid = {});

}  // namespace mrp

#endif
