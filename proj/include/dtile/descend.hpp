#pragma once

#include <array>
#include <vector>

#include "dtile/chains.hpp"
#include "dtile/geom.hpp"
#include "dtile/transforms.hpp"
#include "dtile/words.hpp"

namespace dtile::descend {

using chains::WordChain;
using geom::Vec2;
using transforms::Tag;
using words::Alphabet;

// The Greek cross chain R:UR:U:LU:L:DL:D:RD, the seed every double tile
// descends from.
WordChain greek_cross();

// A chain reached from the Greek cross by a sequence of lifts, together with
// the lift tags in application order (empty for the cross itself).
struct Descendant {
    WordChain chain;
    std::vector<Tag> descent;
};

// All chains reachable from the Greek cross by f1..f4 and the two star lifts
// whose boundary word is at most max_length long. One representative descent
// per commutation class: within a run of {f1,f3} or of {f2,f4} the tags are
// kept in non-decreasing order (members of a run commute, so nothing is
// lost). Result is sorted by (length, boundary word).
std::vector<Descendant> enumerate_descendants(const Alphabet& ab, std::size_t max_length);

// Per-part displacement vectors u_i (indices 1..8, u_{i+4} = -u_i for double
// chains) and the side vectors s_i = u_i + u_{i+1} spanning the tiling
// lattice.
std::array<Vec2, 8> u_vectors(const WordChain& c);
std::array<Vec2, 4> s_vectors(const WordChain& c);

// How the lifts act on the four independent u (resp. s) vectors; the other
// four follow by sign. Indices wrap with u_{i+4} = -u_i.
//
//   f_i on u:  v_i = u_{i-1} + u_i + u_{i+1}, others unchanged
//   g* on u:   v_i = -(u_{i-1} + u_i + u_{i+1}) for every i (parity-free)
//   f_i on s:  t_i = s_i + s_{i+1} - s_{i+2}, t_{i+3} = s_{i+3} + s_{i+2} - s_{i+1},
//              others unchanged
//   g* on s:   t_i = -(s_{i-1} + s_i + s_{i+1}) for every i
enum class ProtoTag { F1, F2, F3, F4, GStar };

const char* proto_tag_name(ProtoTag t);

std::array<Vec2, 4> lift_u(const std::array<Vec2, 4>& u, ProtoTag t);
std::array<Vec2, 4> lift_s(const std::array<Vec2, 4>& s, ProtoTag t);

// Structural facts that hold along every descent from the Greek cross.
struct InvariantReport {
    bool centrally_symmetric = false;  // U_{i+4} is the letterwise flip of U_i
    bool u_crossings_positive = false; // cross(u_i, u_j) > 0 for 1 <= i < j <= 4
    bool s_crossings_positive = false; // cross(s_i, s_j) > 0 for 1 <= i < j <= 4
    bool area_consistent = false;      // cross(s_1,s_3) == cross(s_2,s_4) == shoelace > 0
    long long area = 0;

    bool all() const {
        return centrally_symmetric && u_crossings_positive && s_crossings_positive &&
               area_consistent;
    }
};

InvariantReport check_invariants(const Alphabet& ab, const WordChain& c);

// f_i-goodness of a chain U with simple boundary: f_i(U) is simple as well,
// and the copy of part i+2 shifted across the tile (by s_{i+2} - s_{i+1},
// half a lattice step) lies strictly inside f_i(U). Checked exactly on the
// doubled grid. f_good is the definitional route; f_good_isg replays it as a
// disjointness test between the two shifted copies of the arc i+1..i+3 and
// must always agree.
bool f_good(const Alphabet& ab, const WordChain& c, int i);
bool f_good_isg(const Alphabet& ab, const WordChain& c, int i);

// Full f-goodness: every same-parity pair of lifts applies in both orders
// without losing simplicity, i.e. f_good holds at i and, after lifting, at
// i+2, for i = 1..4.
bool fully_f_good(const Alphabet& ab, const WordChain& c);
bool fully_f_good_isg(const Alphabet& ab, const WordChain& c);

// Forget parities: F1..F4 stay, FOdd/FEven split into their two commuting
// members, GOdd/GEven/GStarOdd/GStarEven all act on the u and s vectors the
// same way and become GStar.
std::vector<ProtoTag> proto_descent(const std::vector<Tag>& descent);

// Reconstruct the proto descent of a chain from its u vectors alone. Greedy:
// the cross products cross(u_i, u_j) single out which lift came last; undo
// it and repeat until the Greek cross vectors appear. Throws NotReachable
// when no test matches or progress stalls.
std::vector<ProtoTag> recover_proto_descent(const std::array<Vec2, 4>& u);
std::vector<ProtoTag> recover_proto_descent(const WordChain& c);

// Commutation-class normal form: sort every maximal run of {f1,f3} and every
// maximal run of {f2,f4}; anything else breaks a run.
std::vector<Tag> canonical_descent(std::vector<Tag> descent);
std::vector<ProtoTag> canonical_descent(std::vector<ProtoTag> descent);

// A descent is clover-shaped when every maximal odd run holds as many f1 as
// f3 tags and every maximal even run as many f2 as f4 (star lifts are free).
// Such chains keep the full symmetry of the square.
bool is_clover_descent(const std::vector<Tag>& descent);

} // namespace dtile::descend
