#pragma once

#include <functional>
#include <vector>

#include "cactop/cactus.hpp"

namespace cactop {

// All framed decorated cacti of a profile up to isomorphism, built from
// non-crossing lobe placements along the outer cycle. With framed == false
// only the canonically framed ones (the unframed cacti) are returned.
std::vector<FramedCactus> enumerate_cacti(const Profile& p, bool framed);

// Same set, by brute force over every matching between lobe flags and
// outer flags. Exponential; intended as a test oracle for small profiles.
std::vector<FramedCactus> enumerate_cacti_bruteforce(const Profile& p, bool framed);

// Every profile with r lobes, k <= max_k and at most max_edges edges.
std::vector<Profile> profiles_up_to(int r, int max_k, int max_edges);

// Number of edges of any cactus of the profile.
int profile_edges(const Profile& p);

}  // namespace cactop
