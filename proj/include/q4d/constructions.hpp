// Diagram generators (spun knots, lens spaces), sums of diagrams, and the
// mutual braid move.
#pragma once

#include <q4d/cover.hpp>
#include <q4d/tangle.hpp>

namespace q4d {

// Build a braid word with the given underlying permutation (all positive
// crossings, bubble-sort factorization).
BraidWord braid_realizing(const Permutation& target);

// Diagram of the 2-sphere spin of the plat-closure knot of k (a 2b-strand
// plat); 5b-4 bridges.
FourPlaneDiagram spun_diagram(const BraidWord& k);

// 2p-bridge diagram of the lens space L(p,1) embedded in the 5-sphere;
// central surface is a torus.
FourPlaneDiagram lens_diagram(int p);

enum class SumMode { distant, connected };

// Distant: disjoint 5-balls, bridges add. Connected: sum along one
// puncture of the central surface, bridges b1+b2-1.
FourPlaneDiagram sum(const FourPlaneDiagram& d1, const FourPlaneDiagram& d2,
                     SumMode mode);

// Append the same braid word to every tangle at the sphere end.
FourPlaneDiagram mutual_braid_move(const FourPlaneDiagram& d, const BraidWord& w);

// Transport a representation along the move so that extension over the
// sectors is preserved: rho' = rho o (Artin automorphism of w)^-1.
PermutationRep transport_rep(const PermutationRep& rho, const BraidWord& w);

}  // namespace q4d
