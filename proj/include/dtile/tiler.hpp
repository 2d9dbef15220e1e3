#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtile/chains.hpp"
#include "dtile/descend.hpp"
#include "dtile/geom.hpp"
#include "dtile/transforms.hpp"
#include "dtile/words.hpp"

namespace dtile::tiler {

using chains::WordChain;
using geom::Vec2;
using transforms::Tag;
using words::Alphabet;
using words::Word;

// A deforming block: the two words substituted for the horizontal and
// vertical generator. Valid when both are nonempty and the elementary cell
// wA wB wA^-1 wB^-1 is simple.
struct Block {
    Word a;
    Word b;

    friend bool operator==(const Block&, const Block&) = default;
};

bool block_valid(const Alphabet& ab, const Block& blk);

// Substitute the block through every part of a chain (R -> a, U -> b).
WordChain deform(const Alphabet& ab, const WordChain& c, const Block& blk);
Word deform_word(const Alphabet& ab, std::string_view w, const Block& blk);

// Canonical representative of a simple closed boundary word: positive
// orientation, starting at the lowest (then leftmost) vertex. Translation
// never shows in a word, so this keys one entry per shape.
Word canonical_boundary_word(const Alphabet& ab, std::string_view w);

// One double tile produced by the generator: the canonical boundary word of
// a deformed descendant, with the recipe that produced it.
struct CensusEntry {
    Word word;
    std::vector<Tag> descent;
    Block block;
    chains::TypeQuad type{};
    std::array<Vec2, 4> sides{};
    long long area = 0;
};

// Every double tile with boundary length at most bound, generated by
// deforming the descendants of the Greek cross by valid blocks and
// deduplicated by canonical word; when several recipes produce the same
// tile, the one with the smallest block is kept. Sorted by (length, word).
std::vector<CensusEntry> generate_census(const Alphabet& ab, std::size_t bound);

// All self-avoiding polygons of the given perimeter, one per translation
// class: rooted at the lowest leftmost vertex, first step R, positive
// orientation (so the last step is D). Sorted.
std::vector<Word> sap_enumerate(int perimeter);

// Brute force: every self-avoiding polygon of perimeter <= bound whose word
// decomposes as a double tile (canonical words, sorted by (length, word)).
// The polygon count explodes with the perimeter, so a cap guards the bound.
std::vector<Word> oracle_enumerate(std::size_t bound, std::size_t cap = 20);

// Full check of one boundary word: normalize orientation, decompose, and
// confirm both lattice tilings cover the plane around the tile. radius 0
// picks one from the tile's bounding box.
struct DoubleTileReport {
    bool is_double_tile = false;
    Word normalized;
    std::optional<transforms::DoubleTileCertificate> certificate;
    std::optional<transforms::RejectReason> reject;
    std::array<Vec2, 4> sides{};
    long long area = 0;
    bool odd_lattice_tiles = false;  // L(s1, s3)
    bool even_lattice_tiles = false; // L(s2, s4)
};

DoubleTileReport verify_double_tile(const Alphabet& ab, std::string_view w, long long radius = 0);

// Deterministic SVG: the tile and its two lattice tilings side by side,
// division points marked. Throws BadInput when w is not a double tile.
std::string render_svg(const Alphabet& ab, std::string_view w);

} // namespace dtile::tiler
