#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtile/error.hpp"

namespace dtile::words {

// A word is a plain string of letters; which letters are legal, and what the
// reversal involution does to them, is carried separately by an Alphabet.
using Word = std::string;

// Finite alphabet with a fixed-point-free involution w -> w^-1 on letters.
// Letters are single chars, so lookup is a flat table.
class Alphabet {
public:
    Alphabet() { table_.fill(0); }

    static Alphabet from_pairs(std::initializer_list<std::pair<char, char>> pairs);

    // R<->L, U<->D: the alphabet of polyomino boundary words.
    static const Alphabet& square();

    // A<->a, B<->b, C<->c: used by the loop/cube templates in tests.
    static const Alphabet& abc();

    bool contains(char c) const { return table_[static_cast<unsigned char>(c)] != 0; }

    char reverse_letter(char c) const;

    // One representative per reversal pair, in insertion order.
    const std::string& representatives() const { return reps_; }

    // All letters, in insertion order (representative first in each pair).
    const std::string& letters() const { return letters_; }

    void check_word(std::string_view w) const;

private:
    std::array<char, 256> table_{};
    std::string reps_;
    std::string letters_;
};

// Reversal: W^-1 traverses W backwards with every letter reversed.
Word reverse(const Alphabet& ab, std::string_view w);

// Letterwise reversal with the order kept: the centrally symmetric copy.
Word flip_letters(const Alphabet& ab, std::string_view w);

// #(w, W) = #(w^-1, W) for every letter w.
bool is_balanced(const Alphabet& ab, std::string_view w);

// Cyclic shift W^<i>: move the first i letters (i mod |W|) to the end.
Word cyclic_shift(std::string_view w, long long i);

// All combinatorial self-intersections of W: balanced contiguous subwords
// other than the empty word and W itself, reported as (start, length) and
// sorted. Special case: when W = w w^-1 for some letter w, the whole word is
// itself reported as an intersection.
std::vector<std::pair<int, int>> combinatorial_self_intersections(const Alphabet& ab,
                                                                  std::string_view w);

bool has_combinatorial_self_intersection(const Alphabet& ab, std::string_view w);

// Letter substitution extended to a homomorphism with zeta(W^-1) = zeta(W)^-1.
// Images are defined on pair representatives; the reversed letter of a pair
// maps to the reversal of the representative's image.
class Substitution {
public:
    Substitution(const Alphabet& domain, const Alphabet& range) : domain_(&domain), range_(&range) {}

    void map(char representative, std::string_view image);

    Word apply(std::string_view w) const;

    const Alphabet& domain() const { return *domain_; }
    const Alphabet& range() const { return *range_; }

private:
    const Alphabet* domain_;
    const Alphabet* range_;
    std::array<std::optional<Word>, 256> images_{};
};

// ----------------------------------------------------------------------------
// Imaginary words: elements of the free group over the alphabet's letters,
// where the group inverse ("negation", written with a hat in the notes below)
// is distinct from the reversal involution. RR^-1 is an honest length-2 word
// that doubles back; R followed by negated R is empty.

struct IEntry {
    char letter = 0;
    bool negative = false;

    friend bool operator==(const IEntry&, const IEntry&) = default;
};

class ImaginaryWord {
public:
    ImaginaryWord() = default;

    static ImaginaryWord from_word(std::string_view w);

    // The entries, freely reduced (no adjacent x, x-negated pairs).
    const std::vector<IEntry>& entries() const { return entries_; }

    void push(IEntry e);

    bool empty() const { return entries_.empty(); }

    friend bool operator==(const ImaginaryWord&, const ImaginaryWord&) = default;

private:
    std::vector<IEntry> entries_;
};

ImaginaryWord iconcat(const ImaginaryWord& a, const ImaginaryWord& b);

// Group inverse: reverse entry order, flip signs, letters unchanged.
ImaginaryWord inegate(const ImaginaryWord& w);

// Reversal lifted to imaginary words: reverse entry order and apply the
// letter involution; signs unchanged.  (w-hat)^-1 = (w^-1)-hat.
ImaginaryWord ireverse(const Alphabet& ab, const ImaginaryWord& w);

// Positive entries minus negative entries; a negated letter has length -1.
long long ilength(const ImaginaryWord& w);

enum class IClass { Empty, Positive, Negative, Mixed };

IClass classify(const ImaginaryWord& w);

// The ordinary word, if the reduced form has no negative entries.
std::optional<Word> to_ordinary(const ImaginaryWord& w);

} // namespace dtile::words
