#ifndef RCN_DRAWING_HPP_
#define RCN_DRAWING_HPP_

#include <map>
#include <string>
#include <vector>

#include "rcn/exact_geom.hpp"
#include "rcn/graph_model.hpp"

namespace rcn {

enum class CoordKind { kInteger, kRational };

// A rectilinear drawing: one exact point per vertex, in general position.
struct Drawing {
  GraphSpec graph = GraphSpec::complete(0);
  std::vector<PtQ> points;
  CoordKind kind = CoordKind::kInteger;

  Drawing() = default;
  // Validates |points| == vertex count and general position.
  Drawing(GraphSpec g, std::vector<PtQ> pts, CoordKind k);

  int n() const { return static_cast<int>(points.size()); }
};

Drawing make_integer_drawing(GraphSpec g, const std::vector<PtI>& pts);

// rcn-drawing/1 JSON persistence. Round-trips are bit-exact for both
// coordinate kinds. load() throws ParseError, GeneralPositionViolation or
// ClassSizeMismatch.
void save_drawing(const std::string& path, const Drawing& d);
Drawing load_drawing(const std::string& path);
std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

// The planar drawing D_r of L_{2r}^r (two vertices per layer, alternating
// between the axes), perturbed to general position. Zero crossings.
Drawing generate_layered(int r);

// Zarankiewicz's axis drawing of K_{m,n}, perturbed to general position.
// Exactly Z(m,n) crossings.
Drawing generate_zarankiewicz(int m, int n);

// The 24 points of the K_24^4 drawing with 2033 crossings, classes 0..3
// in contiguous blocks of six.
Drawing dataset_k24();

// Named seed drawings: k4_planar, k2_edge, k22, k222_hex, layered_3 ..
// layered_6, and k24_4.
std::map<std::string, Drawing> seed_library();

}  // namespace rcn

#endif  // RCN_DRAWING_HPP_
