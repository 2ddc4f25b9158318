#ifndef RCN_PLANTER_HPP_
#define RCN_PLANTER_HPP_

#include "rcn/drawing.hpp"

namespace rcn {

// A rational direction for the splitting line through vertex v: exactly
// floor(d(v)/2) neighbors lie strictly left of the directed line, the rest
// strictly right, and the line passes through no other vertex.
PtQ splitting_direction(const Drawing& d, int v);

// Geometric realization of the planted drawing D^s: each seed vertex
// becomes a cluster of s points spaced along its splitting line, nudged
// off the line so the result is in general position. The offsets are
// shrunk until the brute-force crossing count matches the closed form;
// throws PlantingFailed if that never happens.
Drawing plant(const Drawing& seed, int s);

struct PlantReport {
  long long total = 0;
  long long four_cluster = 0;
  long long three_cluster = 0;
  long long two_cluster = 0;
  long long expected_total = 0;
  long long expected_four = 0;
  long long expected_three = 0;
  long long expected_two = 0;
  bool ok = false;
};

// Recounts the planted drawing, attributes every crossing to its cluster
// signature, and compares each class against the corresponding term of the
// closed form.
PlantReport verify_planted(const Drawing& planted, const Drawing& seed, int s);

}  // namespace rcn

#endif  // RCN_PLANTER_HPP_
