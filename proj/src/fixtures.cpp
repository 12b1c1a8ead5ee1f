#include "eucalc/fixtures.hpp"

namespace eucalc {
namespace fixtures {

SpacePtr point(Mode mode, const std::string& name) {
    return CellSpace::make(name, mode, {{"pt", 0}}, {});
}

SpacePtr affine_line() { return CellSpace::make("A1", Mode::Algebraic, {{"c1", 1}}, {}); }

SpacePtr projective(int m) {
    std::vector<Cell> cells;
    std::vector<std::pair<std::string, std::string>> closure;
    for (int i = 0; i <= m; ++i) {
        cells.push_back({"a" + std::to_string(i), i});
        if (i > 0) closure.emplace_back("a" + std::to_string(i - 1), "a" + std::to_string(i));
    }
    return CellSpace::make("P" + std::to_string(m), Mode::Algebraic, std::move(cells), closure);
}

SpacePtr node() {
    return CellSpace::make("NODE", Mode::Algebraic, {{"x0", 0}, {"e", 1}}, {{"x0", "e"}});
}

SpacePtr segment() {
    return CellSpace::make("SEG", Mode::Topological, {{"p", 0}, {"q", 0}, {"i", 1}},
                           {{"p", "i"}, {"q", "i"}});
}

SpacePtr real_line() { return CellSpace::make("R1", Mode::Topological, {{"r", 1}}, {}); }

SpacePtr circle() {
    return CellSpace::make("CIRC", Mode::Topological, {{"v", 0}, {"e", 1}}, {{"v", "e"}});
}

SpacePtr double_cover_space() {
    return CellSpace::make("DBL", Mode::Topological,
                           {{"v1", 0}, {"v2", 0}, {"e1", 1}, {"e2", 1}},
                           {{"v1", "e1"}, {"v1", "e2"}, {"v2", "e1"}, {"v2", "e2"}});
}

CellMap double_cover() {
    auto dbl = double_cover_space();
    auto circ = circle();
    return CellMap::make_by_ids(dbl, circ,
                                {{"v1", "v"}, {"v2", "v"}, {"e1", "e"}, {"e2", "e"}});
}

BehrendData node_behrend() {
    auto x = node();
    std::vector<Int> values(2);
    values[x->index_of("x0")] = -3;
    values[x->index_of("e")] = -1;
    return BehrendData::user(x, std::move(values));
}

std::vector<SpacePtr> all_spaces() {
    return {point(), affine_line(), projective(1), projective(2), node(),
            segment(), real_line(), circle(), double_cover_space()};
}

std::vector<SpacePtr> algebraic_spaces() {
    return {point(), affine_line(), projective(1), projective(2), node()};
}

}  // namespace fixtures
}  // namespace eucalc
