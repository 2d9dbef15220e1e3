#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dtile/chains.hpp"
#include "dtile/error.hpp"
#include "dtile/words.hpp"

namespace dtile::transforms {

using chains::WordChain;
using words::Alphabet;
using words::Word;

// Transform names. F1..F4 are the four basic lifts; FOdd = F1+F3 and
// FEven = F2+F4 (the members commute); GOdd/GEven are the involutions;
// GStarOdd = GOdd after FEven and GStarEven = GEven after FOdd are the
// total star lifts.
enum class Tag { F1, F2, F3, F4, FOdd, FEven, GOdd, GEven, GStarOdd, GStarEven };

const char* tag_name(Tag t);
std::optional<Tag> parse_tag(std::string_view name);

// f_i lift: V_j = U_j for j != i (mod 4), V_j = U_{(j+3):(j+5)}^-1 for j == i.
// Sends double chains to double chains; i in 1..4.
WordChain f_lift(const Alphabet& ab, const WordChain& c, int i);

// f_i reduction undoes the lift. It applies when b_i >= b_{i-1} + b_{i+1}
// (b = type), peeling V_j = V_{j+5}^-1 W_j V_{j+3}^-1 for j == i and setting
// U_i = W_{i+4}^-1, U_{i+4} = W_i^-1.
bool f_reduction_admissible(const Alphabet& ab, const WordChain& c, int i);
WordChain f_reduce(const Alphabet& ab, const WordChain& c, int i);

// A reduction is false when it cannot shorten: b_{i-1} = b_{i+1} = 0 (then
// the chain is already a root along that axis and f_reduce is the identity).
bool f_reduction_is_false(const Alphabet& ab, const WordChain& c, int i);

enum class Parity { Odd, Even };

// The g transform rewrites the parity's parts through the free group:
//   U_i = V_{i+5} (V_i^-1)-negated V_{i+3}   for i of the parity,
//   U_i = V_i^-1                             for the other parity.
// Applies when b_i <= b_{i-1} + b_{i+1} for both i of the parity, and is an
// involution there. Shortens exactly when the parity's parts dominate.
bool g_admissible(const Alphabet& ab, const WordChain& c, Parity p);
WordChain g_transform(const Alphabet& ab, const WordChain& c, Parity p);

// Total star lifts, computed directly from slices:
//   odd star:  V_i = U_{(i-2):(i+2)}^-1 (odd i),  V_i = U_{(i+3):(i+5)} (even i)
//   even star: the same with odd and even swapped.
// Equal to g after the opposite f pair (see tests).
WordChain gstar_lift(const Alphabet& ab, const WordChain& c, Parity p);

// The two-generator chain X : e : Y : e : X^-1 : e : Y^-1 : e.
WordChain root_chain(const Alphabet& ab, const Word& x, const Word& y);

// FEven applied to root_chain(x, y); substituting R -> x, U -> y in the
// plus-shaped pentomino chain R:UR:U:LU:L:DL:D:RD gives the same chain.
WordChain substituted_cross(const Alphabet& ab, const Word& x, const Word& y);

// Base reached by reduce_to_base.
struct RootBase {
    Word x, y;          // the two free parts
    bool odd_positions; // true: x = U_1, y = U_3 (a2 = a4 = 0); false: x = U_2, y = U_4
};

struct ReductionOutcome {
    std::vector<Tag> reductions;  // applied in order to the input chain
    std::optional<RootBase> root; // set when the base is a root
    WordChain base;               // the final chain (root or genuine loop)

    bool hit_loop() const { return !root.has_value(); }
};

// Shorten an interleaved chain until a root or a genuine loop (type sums
// equal, every part nonempty). Preference at each step: FOdd and FEven pairs,
// then the lowest admissible single f_i, then the shortening g.
ReductionOutcome reduce_to_base(const Alphabet& ab, WordChain c);

// Rewrite a lift sequence (reversed reductions) over {F1..F4, GStarOdd,
// GStarEven}: an FEven directly before a GOdd fuses into GStarOdd (FOdd +
// GEven likewise), a lone FEven/FOdd splits into its two members, and a g
// with no matching f pair throws IrregularG.
std::vector<Tag> repackage_descent(const std::vector<Tag>& lifts);

// Fold lifts over a base chain, in application order.
WordChain apply_descent(const Alphabet& ab, WordChain base, const std::vector<Tag>& lifts);

// Conjugation by one cyclic position: f_i -> f_{i+1}, star parities swap.
// (f_i on a chain shifted by s equals f_{i+s} shifted by s.)
Tag conjugate_tag(Tag t);

// Everything needed to rebuild a double tile:
//   reconstruction = apply_descent(substituted_cross(x, y), descent),
//   cyclic_shift(input, shift) == reconstruction.concat().
struct DoubleTileCertificate {
    Word root_x, root_y;
    std::vector<Tag> descent; // only F1..F4, GStarOdd, GStarEven
    long long shift = 0;
};

enum class RejectReason {
    NoFactorization,   // no A B A^-1 B^-1 split at all: no lattice tiling
    SingleTiling,      // exactly one split: tiles one way only
    NonInterleavedOnly,// division points never interleave: forced overlap
    SelfIntersectionImplied, // the reduction certifies a self-intersection
};

const char* reject_name(RejectReason r);

struct DecomposeResult {
    std::optional<DoubleTileCertificate> certificate;
    std::optional<RejectReason> reject;

    bool is_double_tile() const { return certificate.has_value(); }
};

// Full combinatorial decision for a closed boundary word (orientation as
// given; callers normalize to counterclockwise first when they care).
DecomposeResult decompose(std::string_view w);

} // namespace dtile::transforms
