#ifndef EUCALC_CELL_SPACE_HPP
#define EUCALC_CELL_SPACE_HPP

/*
  Finite combinatorial models of stratified spaces.

  A CellSpace is a finite poset of cells, each carrying a dimension. The
  strict order c' < c says that c' lies in the closure of c, and dimensions
  must strictly increase along it (frontier condition). Two modes fix how a
  cell weighs in Euler characteristics:

    topological: an open d-cell counts (-1)^d   (compactly supported chi)
    algebraic:   a d-dimensional stratum counts 1

  Maps are cellular: monotone assignments with non-negative fiber dimension
  Delta(e) = dim e - dim f(e) on every cell. Each map is read as a trivial
  fibration over every target cell, which is what makes pushforwards exact.
  A map may carry a smooth flag; that is only legal when Delta is the same on
  every cell and the assignment is surjective, i.e. the map looks like a
  trivial bundle with a single open-cell (or affine) fiber.
*/

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eucalc/errors.hpp"

namespace eucalc {

enum class Mode { Topological, Algebraic };

inline const char* mode_name(Mode m) { return m == Mode::Topological ? "topological" : "algebraic"; }

struct Cell {
    std::string id;
    int dim = 0;

    bool operator==(const Cell&) const = default;
};

class CellSpace;
using SpacePtr = std::shared_ptr<const CellSpace>;

class CellSpace {
public:
    // Validates and transitively completes the closure order given as a list
    // of (lower, upper) pairs of cell ids.
    static SpacePtr make(std::string name, Mode mode, std::vector<Cell> cells,
                         const std::vector<std::pair<std::string, std::string>>& closure);

    // Internal constructor for spaces built from an already-closed strict
    // relation (products, fiber products, subspaces). Still checks frontier.
    static SpacePtr from_relation(std::string name, Mode mode, std::vector<Cell> cells,
                                  std::vector<std::vector<bool>> strict_less);

    const std::string& name() const { return name_; }
    Mode mode() const { return mode_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int i) const { return cells_[i]; }
    int dim_of(int i) const { return cells_[i].dim; }

    // max cell dimension; 0 for the empty space
    int variety_dim() const { return variety_dim_; }

    int index_of(const std::string& id) const;           // UnknownCell if absent
    std::optional<int> find(const std::string& id) const;

    bool strictly_less(int a, int b) const { return lt_[a][b]; }
    bool leq(int a, int b) const { return a == b || lt_[a][b]; }

    // chi weight of a single cell in this space's mode
    int weight(int i) const { return mode_ == Mode::Topological ? sign_pow(cells_[i].dim) : 1; }

    bool operator==(const CellSpace& other) const;

private:
    CellSpace() = default;

    std::string name_;
    Mode mode_ = Mode::Algebraic;
    std::vector<Cell> cells_;
    std::vector<std::vector<bool>> lt_;
    int variety_dim_ = 0;
};

// weight of a d-dimensional open-cell / affine fiber in pushforwards
inline int fiber_weight(Mode mode, int d) { return mode == Mode::Topological ? sign_pow(d) : 1; }

bool same_space(const SpacePtr& a, const SpacePtr& b);

enum class SubsetKind { Closed, Open, LocallyClosed, General };

const char* subset_kind_name(SubsetKind k);

// A subset of the cells of a space, with its order-theoretic kind computed:
// closed = down-closed, open = up-closed, locally closed = order-convex.
class CellSubset {
public:
    CellSubset(SpacePtr space, std::vector<int> members);

    static CellSubset whole(const SpacePtr& space);
    static CellSubset of_ids(const SpacePtr& space, const std::vector<std::string>& ids);

    const SpacePtr& space() const { return space_; }
    const std::vector<int>& members() const { return members_; }  // sorted, unique
    SubsetKind kind() const { return kind_; }
    bool contains(int i) const { return in_[i]; }
    bool is_closed() const { return kind_ == SubsetKind::Closed; }
    bool is_open() const { return kind_ == SubsetKind::Open; }

    CellSubset complement() const;

private:
    SpacePtr space_;
    std::vector<int> members_;
    std::vector<bool> in_;
    SubsetKind kind_ = SubsetKind::General;
};

class CellMap {
public:
    // Validates monotonicity and fiber dimensions; the smooth flag is only
    // accepted when legal (constant Delta, surjective) - SmoothFlagRejected
    // otherwise. Maps constructed internally derive the flag automatically.
    static CellMap make(SpacePtr source, SpacePtr target, std::vector<int> assign,
                        bool request_smooth = false);
    static CellMap make_by_ids(SpacePtr source, SpacePtr target,
                               const std::vector<std::pair<std::string, std::string>>& assign,
                               bool request_smooth = false);

    static CellMap identity(const SpacePtr& space);
    static CellMap to_point(const SpacePtr& space, const SpacePtr& point);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int apply(int source_cell) const { return assign_[source_cell]; }
    const std::vector<int>& assign() const { return assign_; }
    int fiber_dim(int source_cell) const { return delta_[source_cell]; }
    const std::vector<int>& fiber_dims() const { return delta_; }
    bool smooth() const { return smooth_; }

    bool is_identity() const;
    // injective, fiber dimension zero, and order-reflecting
    bool is_inclusion() const;

    bool operator==(const CellMap& other) const;

private:
    CellMap() = default;
    static bool smooth_eligible(const CellSpace& src, const CellSpace& dst,
                                const std::vector<int>& assign, const std::vector<int>& delta);

    SpacePtr source_;
    SpacePtr target_;
    std::vector<int> assign_;
    std::vector<int> delta_;
    bool smooth_ = false;
};

CellMap compose_maps(const CellMap& f, const CellMap& g);  // g after f; SpaceMismatch if not chained

struct ProductSpace {
    SpacePtr space;
    CellMap to_left;   // projection onto the first factor
    CellMap to_right;  // projection onto the second factor
    // cell index in the product for a (left, right) pair of factor indices
    int pair_index(int left, int right) const { return left * right_size + right; }
    int right_size = 0;
};

ProductSpace product_space(const SpacePtr& x, const SpacePtr& y);

// Subspace on a subset of cells, with the induced order, plus its inclusion.
struct Subspace {
    SpacePtr space;
    CellMap inclusion;
};

Subspace subspace(const CellSubset& subset, const std::string& name_suffix = "");

// Fiber square
//
//      W ---to_right---> Z
//      |                 |
//   to_left              g
//      |                 |
//      X -------f------> Y
//
// Supported fragment: g an inclusion, f or g smooth, or a caller-supplied
// pairing. The corner W has one cell per compatible pair (e, z) with
// f(e) = g(z), of dimension dim e + dim z - dim f(e).
struct FiberSquare {
    CellMap f;        // X -> Y
    CellMap g;        // Z -> Y
    SpacePtr corner;  // W
    CellMap to_left;  // W -> X
    CellMap to_right; // W -> Z
    // pairing[w] = (cell of X, cell of Z)
    std::vector<std::pair<int, int>> pairing;
};

FiberSquare fiber_product(const CellMap& f, const CellMap& g);
FiberSquare fiber_product_with_pairing(const CellMap& f, const CellMap& g,
                                       const std::vector<std::pair<int, int>>& pairing);

// Euler characteristic with compact support of a subset of cells.
Int euler_cc(const CellSubset& subset);
Int euler_cc(const SpacePtr& space);

// All down-closed subsets of a space; feasible for small fixtures only.
std::vector<CellSubset> enumerate_closed_subsets(const SpacePtr& space, int max_cells = 16);

}  // namespace eucalc

#endif
