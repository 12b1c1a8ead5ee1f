#ifndef EUCALC_HARNESS_HPP
#define EUCALC_HARNESS_HPP

/*
  Randomized checker for the seven bivariant axioms and the closure of the
  Behrend subtheory under the three operations.

  Every check is generated from (axiom kind, seed) alone, evaluated purely,
  and can be serialized into a replay document holding the actual spaces,
  maps and functions. Corner spaces of fiber squares are never serialized:
  evaluators rebuild them deterministically from the inputs.

  Instance roles by axiom (spaces / maps / functions / behrend):

    B1,B2,B4   W; h: Z->W, g: Y->Z, f: X->Y   alpha on X, beta, gamma as needed
    B3         Y; f: X->Y, g: Y'->Y, h: Y''->Y'  (g, h smooth or inclusions)
    B5,B6      Z; h: Y->Z, f: X->Y, g: Z'->Z     (g smooth or inclusion)
    B7         Z; h: Y->Z, f: X->Y, g: Y'->Y     (g smooth or inclusion)
    BehProduct Z; g: Y->Z, f: X->Y; behrend on Y and Z; members a, b
    BehPushforward  same chain; behrend on Z; member a over the composite
    BehPullback     Y; f: X->Y, g: Y'->Y smooth; behrend on Y; member a
*/

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eucalc/bivariant.hpp"
#include "eucalc/random_gen.hpp"

namespace eucalc {

extern const std::vector<std::string> kAxiomKinds;

struct AxiomInstance {
    std::string axiom;
    std::uint64_t seed = 0;
    std::vector<SpacePtr> spaces;
    std::vector<CellMap> maps;
    std::vector<ConstructibleFunction> functions;
    std::vector<BehrendData> behrend;
};

struct CheckOutcome {
    bool pass = false;
    std::string detail;  // human-readable account of what differed
};

AxiomInstance generate_instance(const std::string& axiom, std::uint64_t seed, const GenBounds& bounds);
CheckOutcome evaluate_instance(const AxiomInstance& instance);

struct AxiomTally {
    std::string axiom;
    int run = 0;
    int passed = 0;
};

struct HarnessReport {
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<AxiomTally> tallies;
    std::vector<AxiomInstance> failures;

    int total_run() const;
    int total_passed() const;
    bool all_passed() const { return failures.empty(); }
};

// Runs `count` checks cycling through the axiom kinds, check i drawing from
// mix_seed(seed, i). Work is sharded over `workers` threads (0 = automatic);
// results do not depend on the worker count.
HarnessReport check_axioms(std::uint64_t seed, int count, const GenBounds& bounds = {}, int workers = 0);

}  // namespace eucalc

#endif
