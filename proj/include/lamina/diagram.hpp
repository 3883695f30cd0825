#pragma once

#include "lamina/chart.hpp"

namespace lamina {

// Superimposes two realized multicurves, counts crossings and removes bigons
// until none remain. A bigon here is a two-sided face of the four-valent
// crossing diagram with distinct corners; removing it deletes its two
// crossings and splices the strands, which strictly decreases the crossing
// count. The final count is the geometric intersection number.
struct ReductionStats {
  long long initial = 0;
  long long bigons_removed = 0;
  long long final_count = 0;
};

ReductionStats reduced_intersection(const StrandDiagram& a, const StrandDiagram& b,
                                    long long overflow_limit);

}  // namespace lamina
