#include "eucalc/cell_space.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace eucalc {

namespace {

// Warshall transitive closure; spaces are desk-scale so cubic is fine.
void transitive_close(std::vector<std::vector<bool>>& lt) {
    const int n = static_cast<int>(lt.size());
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!lt[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (lt[k][j]) lt[i][j] = true;
        }
}

void check_frontier(const std::vector<Cell>& cells, const std::vector<std::vector<bool>>& lt) {
    const int n = static_cast<int>(cells.size());
    for (int i = 0; i < n; ++i) {
        if (lt[i][i]) throw Error(Err::CycleInOrder, "closure order has a cycle through '" + cells[i].id + "'");
        for (int j = 0; j < n; ++j) {
            if (lt[i][j] && cells[i].dim >= cells[j].dim)
                throw Error(Err::FrontierViolation,
                            "'" + cells[i].id + "' (dim " + std::to_string(cells[i].dim) + ") < '" +
                                cells[j].id + "' (dim " + std::to_string(cells[j].dim) + ")");
        }
    }
}

}  // namespace

SpacePtr CellSpace::make(std::string name, Mode mode, std::vector<Cell> cells,
                         const std::vector<std::pair<std::string, std::string>>& closure) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        if (cells[i].dim < 0)
            throw Error(Err::FrontierViolation, "cell '" + cells[i].id + "' has negative dimension");
        if (!index.emplace(cells[i].id, i).second)
            throw Error(Err::DuplicateCellId, "cell id '" + cells[i].id + "' appears twice");
    }
    std::vector<std::vector<bool>> lt(cells.size(), std::vector<bool>(cells.size(), false));
    for (const auto& [lower, upper] : closure) {
        auto lo = index.find(lower);
        auto hi = index.find(upper);
        if (lo == index.end()) throw Error(Err::UnknownCell, "closure refers to unknown cell '" + lower + "'");
        if (hi == index.end()) throw Error(Err::UnknownCell, "closure refers to unknown cell '" + upper + "'");
        if (lo->second == hi->second)
            throw Error(Err::CycleInOrder, "cell '" + lower + "' related to itself");
        lt[lo->second][hi->second] = true;
    }
    transitive_close(lt);
    return from_relation(std::move(name), mode, std::move(cells), std::move(lt));
}

SpacePtr CellSpace::from_relation(std::string name, Mode mode, std::vector<Cell> cells,
                                  std::vector<std::vector<bool>> strict_less) {
    check_frontier(cells, strict_less);
    auto space = std::shared_ptr<CellSpace>(new CellSpace());
    space->name_ = std::move(name);
    space->mode_ = mode;
    space->cells_ = std::move(cells);
    space->lt_ = std::move(strict_less);
    space->variety_dim_ = 0;
    for (const auto& c : space->cells_) space->variety_dim_ = std::max(space->variety_dim_, c.dim);
    return space;
}

int CellSpace::index_of(const std::string& id) const {
    auto found = find(id);
    if (!found) throw Error(Err::UnknownCell, "no cell '" + id + "' in space '" + name_ + "'");
    return *found;
}

std::optional<int> CellSpace::find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (cells_[i].id == id) return i;
    return std::nullopt;
}

bool CellSpace::operator==(const CellSpace& other) const {
    return name_ == other.name_ && mode_ == other.mode_ && cells_ == other.cells_ && lt_ == other.lt_;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

const char* subset_kind_name(SubsetKind k) {
    switch (k) {
        case SubsetKind::Closed: return "closed";
        case SubsetKind::Open: return "open";
        case SubsetKind::LocallyClosed: return "locally-closed";
        case SubsetKind::General: return "general";
    }
    return "general";
}

CellSubset::CellSubset(SpacePtr space, std::vector<int> members) : space_(std::move(space)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && (members.front() < 0 || members.back() >= space_->size()))
        throw Error(Err::UnknownCell, "subset member out of range");
    members_ = std::move(members);
    in_.assign(space_->size(), false);
    for (int i : members_) in_[i] = true;

    bool down_closed = true, up_closed = true, convex = true;
    const int n = space_->size();
    for (int m : members_) {
        for (int j = 0; j < n; ++j) {
            if (space_->strictly_less(j, m) && !in_[j]) down_closed = false;
            if (space_->strictly_less(m, j) && !in_[j]) up_closed = false;
        }
    }
    if (!down_closed && !up_closed) {
        for (int a : members_) {
            for (int c : members_) {
                if (!space_->strictly_less(a, c)) continue;
                for (int b = 0; b < n && convex; ++b)
                    if (!in_[b] && space_->strictly_less(a, b) && space_->strictly_less(b, c)) convex = false;
            }
            if (!convex) break;
        }
    }
    if (down_closed) kind_ = SubsetKind::Closed;
    else if (up_closed) kind_ = SubsetKind::Open;
    else if (convex) kind_ = SubsetKind::LocallyClosed;
    else kind_ = SubsetKind::General;
}

CellSubset CellSubset::whole(const SpacePtr& space) {
    std::vector<int> all(space->size());
    for (int i = 0; i < space->size(); ++i) all[i] = i;
    return CellSubset(space, std::move(all));
}

CellSubset CellSubset::of_ids(const SpacePtr& space, const std::vector<std::string>& ids) {
    std::vector<int> members;
    members.reserve(ids.size());
    for (const auto& id : ids) members.push_back(space->index_of(id));
    return CellSubset(space, std::move(members));
}

CellSubset CellSubset::complement() const {
    std::vector<int> rest;
    for (int i = 0; i < space_->size(); ++i)
        if (!in_[i]) rest.push_back(i);
    return CellSubset(space_, std::move(rest));
}

bool CellMap::smooth_eligible(const CellSpace& src, const CellSpace& dst,
                              const std::vector<int>& assign, const std::vector<int>& delta) {
    if (src.empty()) return dst.empty();
    for (std::size_t i = 1; i < delta.size(); ++i)
        if (delta[i] != delta[0]) return false;
    std::vector<bool> hit(dst.size(), false);
    for (int t : assign) hit[t] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

CellMap CellMap::make(SpacePtr source, SpacePtr target, std::vector<int> assign, bool request_smooth) {
    if (source->mode() != target->mode())
        throw Error(Err::ModeMismatch, "map '" + source->name() + "' -> '" + target->name() + "'");
    if (static_cast<int>(assign.size()) != source->size())
        throw Error(Err::UnknownCell, "assignment must cover every source cell");
    std::vector<int> delta(assign.size(), 0);
    for (int e = 0; e < source->size(); ++e) {
        int t = assign[e];
        if (t < 0 || t >= target->size())
            throw Error(Err::UnknownCell, "assignment target out of range for '" + source->cell(e).id + "'");
        delta[e] = source->dim_of(e) - target->dim_of(t);
        if (delta[e] < 0)
            throw Error(Err::NegativeFiberDim, "cell '" + source->cell(e).id + "' maps onto higher-dimensional '" +
                                                   target->cell(t).id + "'");
    }
    for (int a = 0; a < source->size(); ++a)
        for (int b = 0; b < source->size(); ++b)
            if (source->strictly_less(a, b) && !target->leq(assign[a], assign[b]))
                throw Error(Err::NotMonotone, "'" + source->cell(a).id + "' < '" + source->cell(b).id +
                                                  "' but images are unrelated");

    CellMap map;
    map.smooth_ = smooth_eligible(*source, *target, assign, delta);
    if (request_smooth && !map.smooth_)
        throw Error(Err::SmoothFlagRejected, "map is not a trivial fibration with a single fiber dimension");
    map.source_ = std::move(source);
    map.target_ = std::move(target);
    map.assign_ = std::move(assign);
    map.delta_ = std::move(delta);
    return map;
}

CellMap CellMap::make_by_ids(SpacePtr source, SpacePtr target,
                             const std::vector<std::pair<std::string, std::string>>& assign,
                             bool request_smooth) {
    std::vector<int> table(source->size(), -1);
    for (const auto& [src, dst] : assign) {
        int e = source->index_of(src);
        if (table[e] != -1) throw Error(Err::DuplicateCellId, "cell '" + src + "' assigned twice");
        table[e] = target->index_of(dst);
    }
    for (int e = 0; e < source->size(); ++e)
        if (table[e] == -1)
            throw Error(Err::UnknownCell, "cell '" + source->cell(e).id + "' has no assignment");
    return make(std::move(source), std::move(target), std::move(table), request_smooth);
}

CellMap CellMap::identity(const SpacePtr& space) {
    std::vector<int> assign(space->size());
    for (int i = 0; i < space->size(); ++i) assign[i] = i;
    return make(space, space, std::move(assign));
}

CellMap CellMap::to_point(const SpacePtr& space, const SpacePtr& point) {
    if (point->size() != 1 || point->dim_of(0) != 0)
        throw Error(Err::SpaceMismatch, "'" + point->name() + "' is not a point");
    return make(space, point, std::vector<int>(space->size(), 0));
}

bool CellMap::is_identity() const {
    if (!same_space(source_, target_)) return false;
    for (int i = 0; i < static_cast<int>(assign_.size()); ++i)
        if (assign_[i] != i) return false;
    return true;
}

bool CellMap::is_inclusion() const {
    std::unordered_set<int> seen;
    for (int e = 0; e < source_->size(); ++e) {
        if (delta_[e] != 0) return false;
        if (!seen.insert(assign_[e]).second) return false;
    }
    // order-reflecting: images related only when sources are
    for (int a = 0; a < source_->size(); ++a)
        for (int b = 0; b < source_->size(); ++b)
            if (target_->strictly_less(assign_[a], assign_[b]) && !source_->strictly_less(a, b)) return false;
    return true;
}

bool CellMap::operator==(const CellMap& other) const {
    return same_space(source_, other.source_) && same_space(target_, other.target_) && assign_ == other.assign_;
}

CellMap compose_maps(const CellMap& f, const CellMap& g) {
    if (!same_space(f.target(), g.source()))
        throw Error(Err::SpaceMismatch, "cannot compose: target of first is '" + f.target()->name() +
                                            "', source of second is '" + g.source()->name() + "'");
    std::vector<int> assign(f.source()->size());
    for (int e = 0; e < f.source()->size(); ++e) assign[e] = g.apply(f.apply(e));
    return CellMap::make(f.source(), g.target(), std::move(assign));
}

ProductSpace product_space(const SpacePtr& x, const SpacePtr& y) {
    if (x->mode() != y->mode())
        throw Error(Err::ModeMismatch, "product of '" + x->name() + "' and '" + y->name() + "'");
    const int nx = x->size(), ny = y->size();
    std::vector<Cell> cells;
    cells.reserve(nx * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            cells.push_back({x->cell(i).id + "|" + y->cell(j).id, x->dim_of(i) + y->dim_of(j)});
    std::vector<std::vector<bool>> lt(cells.size(), std::vector<bool>(cells.size(), false));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nx; ++k)
                for (int l = 0; l < ny; ++l) {
                    if (i == k && j == l) continue;
                    if (x->leq(i, k) && y->leq(j, l)) lt[i * ny + j][k * ny + l] = true;
                }
    auto prod = CellSpace::from_relation(x->name() + "*" + y->name(), x->mode(), std::move(cells), std::move(lt));

    std::vector<int> to_x(prod->size()), to_y(prod->size());
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            to_x[i * ny + j] = i;
            to_y[i * ny + j] = j;
        }
    ProductSpace out;
    out.space = prod;
    out.to_left = CellMap::make(prod, x, std::move(to_x));
    out.to_right = CellMap::make(prod, y, std::move(to_y));
    out.right_size = ny;
    return out;
}

Subspace subspace(const CellSubset& subset, const std::string& name_suffix) {
    const auto& parent = subset.space();
    const auto& members = subset.members();
    std::vector<Cell> cells;
    cells.reserve(members.size());
    for (int m : members) cells.push_back(parent->cell(m));
    std::vector<std::vector<bool>> lt(members.size(), std::vector<bool>(members.size(), false));
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = 0; b < members.size(); ++b)
            if (parent->strictly_less(members[a], members[b])) lt[a][b] = true;
    std::string suffix = name_suffix.empty() ? std::string(".sub") : name_suffix;
    auto sub = CellSpace::from_relation(parent->name() + suffix, parent->mode(), std::move(cells), std::move(lt));
    std::vector<int> incl(members.begin(), members.end());
    return Subspace{sub, CellMap::make(sub, parent, std::move(incl))};
}

namespace {

FiberSquare build_square(const CellMap& f, const CellMap& g,
                         const std::vector<std::pair<int, int>>& pairs) {
    const auto& x = f.source();
    const auto& z = g.source();
    const auto& y = f.target();
    std::vector<Cell> cells;
    cells.reserve(pairs.size());
    for (const auto& [e, zc] : pairs) {
        int common = f.apply(e);
        cells.push_back({x->cell(e).id + "&" + z->cell(zc).id,
                         x->dim_of(e) + z->dim_of(zc) - y->dim_of(common)});
    }
    std::vector<std::vector<bool>> lt(pairs.size(), std::vector<bool>(pairs.size(), false));
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (a == b) continue;
            if (x->leq(pairs[a].first, pairs[b].first) && z->leq(pairs[a].second, pairs[b].second))
                lt[a][b] = true;
        }
    // from_relation raises FrontierViolation when the pair order is bad
    auto corner = CellSpace::from_relation("fib(" + x->name() + "," + z->name() + ")", x->mode(),
                                           std::move(cells), std::move(lt));
    std::vector<int> to_x(pairs.size()), to_z(pairs.size());
    for (std::size_t w = 0; w < pairs.size(); ++w) {
        to_x[w] = pairs[w].first;
        to_z[w] = pairs[w].second;
    }
    FiberSquare sq;
    sq.f = f;
    sq.g = g;
    sq.corner = corner;
    sq.to_left = CellMap::make(corner, x, std::move(to_x));
    sq.to_right = CellMap::make(corner, z, std::move(to_z));
    sq.pairing = pairs;
    return sq;
}

std::vector<std::pair<int, int>> compatible_pairs(const CellMap& f, const CellMap& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < f.source()->size(); ++e)
        for (int zc = 0; zc < g.source()->size(); ++zc)
            if (f.apply(e) == g.apply(zc)) pairs.emplace_back(e, zc);
    return pairs;
}

}  // namespace

FiberSquare fiber_product(const CellMap& f, const CellMap& g) {
    if (!same_space(f.target(), g.target()))
        throw Error(Err::SpaceMismatch, "fiber product legs have different targets");
    if (!(g.is_inclusion() || f.smooth() || g.smooth()))
        throw Error(Err::UnsupportedFragment,
                    "general fiber products need an inclusion or smooth leg, or a supplied pairing");
    return build_square(f, g, compatible_pairs(f, g));
}

FiberSquare fiber_product_with_pairing(const CellMap& f, const CellMap& g,
                                       const std::vector<std::pair<int, int>>& pairing) {
    if (!same_space(f.target(), g.target()))
        throw Error(Err::SpaceMismatch, "fiber product legs have different targets");
    auto expected = compatible_pairs(f, g);
    std::set<std::pair<int, int>> want(expected.begin(), expected.end());
    std::set<std::pair<int, int>> got(pairing.begin(), pairing.end());
    if (want != got || pairing.size() != got.size())
        throw Error(Err::UnsupportedFragment, "supplied pairing does not enumerate compatible pairs exactly once");
    return build_square(f, g, pairing);
}

Int euler_cc(const CellSubset& subset) {
    Int total(0);
    for (int m : subset.members()) total += subset.space()->weight(m);
    return total;
}

Int euler_cc(const SpacePtr& space) { return euler_cc(CellSubset::whole(space)); }

std::vector<CellSubset> enumerate_closed_subsets(const SpacePtr& space, int max_cells) {
    if (space->size() > max_cells)
        throw Error(Err::BoundExceeded, "space too large to enumerate closed subsets");
    std::vector<CellSubset> out;
    const int n = space->size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool down_closed = true;
        for (int i = 0; i < n && down_closed; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < n; ++j)
                if (space->strictly_less(j, i) && !(mask & (1u << j))) {
                    down_closed = false;
                    break;
                }
        }
        if (!down_closed) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(i);
        out.emplace_back(space, std::move(members));
    }
    return out;
}

}  // namespace eucalc
