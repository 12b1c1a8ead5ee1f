#ifndef EUCALC_FIXTURES_HPP
#define EUCALC_FIXTURES_HPP

/*
  Named spaces used throughout the tests and the randomized harness.

    PT    one algebraic 0-cell
    A1    one algebraic 1-cell (affine line)
    Pm    chain a0 < a1 < ... < am, dims 0..m (projective m-space)
    NODE  algebraic x0 < e, dims 0,1; default nu(e) = -1, nu(x0) = -3
    SEG   topological p < i, q < i, dims 0,0,1 (closed interval)
    R1    one topological 1-cell (open line)
    CIRC  topological v < e (circle)
    DBL   topological double cover of CIRC: v1,v2,e1,e2 with vi < ej
*/

#include "eucalc/behrend.hpp"
#include "eucalc/cell_space.hpp"

namespace eucalc {
namespace fixtures {

SpacePtr point(Mode mode = Mode::Algebraic, const std::string& name = "PT");
SpacePtr affine_line();                 // A1
SpacePtr projective(int m);             // Pm
SpacePtr node();                        // NODE
SpacePtr segment();                     // SEG
SpacePtr real_line();                   // R1
SpacePtr circle();                      // CIRC
SpacePtr double_cover_space();          // DBL
CellMap double_cover();                 // DBL -> CIRC

// default user Behrend data on NODE: nu(e) = -1, nu(x0) = -3
BehrendData node_behrend();

// every named fixture space, for "all fixtures" sweeps
std::vector<SpacePtr> all_spaces();
std::vector<SpacePtr> algebraic_spaces();

}  // namespace fixtures
}  // namespace eucalc

#endif
