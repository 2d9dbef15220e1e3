#pragma once

#include <vector>

#include "dtile/chains.hpp"
#include "dtile/descend.hpp"
#include "dtile/geom.hpp"

namespace dtile::gaussian {

using chains::WordChain;
using geom::Vec2;

// z = a + bi with a, b > 0 and p = a^2 + b^2 an odd prime. Stored with
// a < b (the two orders give conjugate primes and the same pair of
// lattices, so nothing is lost by normalizing).
struct ProperGaussianPrime {
    long long a = 0;
    long long b = 0;
    long long p = 0;

    friend bool operator==(const ProperGaussianPrime&, const ProperGaussianPrime&) = default;
};

bool is_proper(long long a, long long b);

// Validates and normalizes; throws BadPair otherwise.
ProperGaussianPrime proper(long long a, long long b);

// The lattices of the complex multiples of z and of its conjugate.
geom::Lattice lattice_of(long long a, long long b);      // L((a,b), (-b,a))
geom::Lattice conj_lattice_of(long long a, long long b); // L((b,a), (-a,b))

// Whether two lattices contain exactly the same points.
bool lattice_equal(const geom::Lattice& l1, const geom::Lattice& l2);

// A set of p cells is z-good when no two of them differ by a nonzero
// vector of L(z) or of L(conj z); the cell set then meets every residue
// class of both lattices exactly once, i.e. it is a double tile on that
// pair of lattices. Throws WrongArea unless exactly a^2 + b^2 cells are
// given. Cells are unit squares named by their lower-left corner.
bool is_z_good(const std::vector<Vec2>& cells, long long a, long long b);

// The graph on the cells of the (a+b) x (a+b) square whose edges join
// cells at displacement {|dx|, |dy|} = {a, b}. For a < b it always splits
// into (a-b)^2 isolated cells plus disjoint even cycles; each cycle is
// listed in traversal order starting from its smallest cell.
struct GridGraph {
    long long side = 0;
    std::vector<Vec2> isolated;
    std::vector<std::vector<Vec2>> cycles;
};

GridGraph grid_graph(long long a, long long b);

// Every z-good polyomino that fits inside the (a+b) x (a+b) square must
// consist of all isolated cells of the grid graph plus one alternating
// half of each cycle. Try all half-selections and keep the connected
// ones; each survivor is z-good. Returned cell sets are normalized to
// touch the axes and sorted.
std::vector<std::vector<Vec2>> mebane_construction(long long a, long long b);

// One step of the pair recurrence that walks (a, b) down to the base
// pair (1, 2): fOdd when 3a < b, fEven when b < 2a, g* when 2a < b < 3a.
enum class PlanStep { FOdd, FEven, GStar };

const char* plan_step_name(PlanStep s);

// steps are in application order from the Greek cross; k counts the g*
// steps (each can be instantiated as g*O or g*E, giving 2^k chains).
struct CloverPlan {
    std::vector<PlanStep> steps;
    int k = 0;

    friend bool operator==(const CloverPlan&, const CloverPlan&) = default;
};

// Requires 0 < a < b, a + b odd, gcd(a, b) = 1; throws BadPair otherwise.
// (Pairs are not normalized here: the recurrence needs a < b.)
CloverPlan clover_plan(long long a, long long b);

// The 2^k clovers whose tiling lattices are L(z) and L(conj z), as
// descendants of the Greek cross over {fOdd, fEven, g*O, g*E}. Ordered
// with g*O chosen before g*E at each slot.
std::vector<descend::Descendant> clovers_for(long long a, long long b);

// Whether all eight plane isometries of the square fix the canonical
// boundary word, i.e. the enclosed shape has the full symmetry group of
// an axes-aligned square.
bool has_square_symmetry(std::string_view w);

// A descendant chain is a clover when its outline has that full square
// symmetry around its center. (Equivalently, its descent uses only fOdd,
// fEven, g*O, g*E; see descend::is_clover_descent for the syntactic
// test.)
bool is_clover(const WordChain& c);

// Cells enclosed by the chain's boundary word, translated so the minimum
// x and y are zero, sorted. Helper for comparing chains with cell-level
// constructions.
std::vector<Vec2> chain_cells(const WordChain& c);

// Same normalization applied to an arbitrary cell set.
std::vector<Vec2> normalize_cells(std::vector<Vec2> cells);

} // namespace dtile::gaussian
