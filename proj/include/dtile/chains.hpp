#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "dtile/error.hpp"
#include "dtile/words.hpp"

namespace dtile::chains {

using words::Alphabet;
using words::Word;

// A cyclic sequence of exactly eight words over a common alphabet. Parts are
// addressed 1-based and cyclically, to match the equation systems.
struct WordChain {
    std::array<Word, 8> parts;

    const Word& part(long long i) const { return parts[static_cast<size_t>(((i - 1) % 8 + 8) % 8)]; }
    Word& part(long long i) { return parts[static_cast<size_t>(((i - 1) % 8 + 8) % 8)]; }

    Word concat() const;
    size_t total_length() const;

    // Rotate parts: shifted(1).part(i) == part(i+1).
    WordChain shifted(long long k) const;

    friend bool operator==(const WordChain&, const WordChain&) = default;
};

// Text form: eight parts joined by ':', the empty part written '-'.
WordChain parse_chain(const Alphabet& ab, std::string_view text);
std::string format_chain(const WordChain& c);

// Part lengths (a1, a2, a3, a4); valid double chains have |U_i| = |U_{i+4}|.
struct TypeQuad {
    std::array<long long, 4> a;

    long long operator[](long long i) const { return a[static_cast<size_t>(((i - 1) % 4 + 4) % 4)]; }
    long long sum() const { return a[0] + a[1] + a[2] + a[3]; }

    friend bool operator==(const TypeQuad&, const TypeQuad&) = default;
};

// System (I):  U_i U_{i+1} = (U_{i+4} U_{i+5})^-1 for every i.
bool is_interleaved_double_chain(const Alphabet& ab, const WordChain& c);

// System (NI): U_i = U_{i+4}^-1 for odd i, and
//              U_{i-1} U_i U_{i+1} = (U_{i+3} U_{i+4} U_{i+5})^-1 for odd i.
bool is_non_interleaved_double_chain(const Alphabet& ab, const WordChain& c);

// Type of a chain satisfying (I) or (NI); throws NotDoubleChain otherwise.
TypeQuad type_of(const Alphabet& ab, const WordChain& c);

// U_{i:j} = U_i U_{i+1} ... U_j with indices taken mod 8; i <= j may be any
// integers, and 1 <= j < i <= 8 abbreviates U_{i:(j+8)}.
Word slice(const WordChain& c, long long i, long long j);

// A factorization W^<offset> = A B A^-1 B^-1, recorded by its division
// points: the four letter positions where the factors begin.
struct TileFactorization {
    int offset = 0;
    int len_a = 0;
    std::array<int, 4> points{}; // sorted positions in W

    friend bool operator==(const TileFactorization&, const TileFactorization&) = default;
    friend bool operator<(const TileFactorization& p, const TileFactorization& q) {
        return p.points < q.points;
    }
};

// All factorizations of the closed word W as A B A^-1 B^-1 up to rotation,
// deduplicated by division-point set and sorted.
std::vector<TileFactorization> theta_tile_factorizations(std::string_view w);

enum class ChainKind { Interleaved, NonInterleaved };

// Merge the division points of two distinct factorizations of the same word
// into an eight-part chain. The merged points must alternate PQPQPQPQ
// (interleaved) or pair up PPQQPPQQ (non-interleaved) around the cycle;
// coinciding points give empty parts. Starts are normalized lowest offset
// first. Returns the chain, its kind, and the letter offset of part 1 in W.
struct BuiltChain {
    WordChain chain;
    ChainKind kind;
    int offset = 0;
};
BuiltChain build_double_chain(std::string_view w, const TileFactorization& q1,
                              const TileFactorization& q2);

// For a non-interleaved chain: does the concatenation match the template
// A B C B^-1 A^-1 B C^-1 B^-1 with B nonempty? (True exactly when a2 = a4 > 0;
// such a realization always self-intersects geometrically.)
bool detect_theta_cube(const Alphabet& ab, const WordChain& c);

// A nonempty balanced subword of the concatenation, located by (start, length).
struct SelfIntersectionEvidence {
    Word witness;
    int start = 0;
    int length = 0;
};

// For a non-interleaved chain with a1 + a3 != 0 and a2 + a4 != 0 and
// a2 != a4: the balanced subword Y^-1 X^-1 produced by the equations
//   U_2 = U_8^-1 X,  U_6 = U_4^-1 Y,  X U_3 = U_7^-1 Y^-1,
// which straddles the U_3 | U_4 boundary (or the mirrored position when
// a4 > a2). Throws NotNonInterleaved / CaseMismatch when inapplicable.
SelfIntersectionEvidence noninterleaved_witness(const Alphabet& ab, const WordChain& c);

// Stable self-intersection: a nonempty balanced subword of some 4-part slice
// U_{i:(i+3)}. Returned as (slice start i in 1..8, start, length), scanning
// i ascending, then start, then length.
struct StableHit {
    int slice_index = 0;
    int start = 0;
    int length = 0;
};
std::optional<StableHit> find_stable_self_intersection(const Alphabet& ab, const WordChain& c);

} // namespace dtile::chains
