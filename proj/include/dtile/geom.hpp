#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dtile/error.hpp"
#include "dtile/words.hpp"

namespace dtile::geom {

struct Vec2 {
    long long x = 0;
    long long y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(long long k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend bool operator<(const Vec2& a, const Vec2& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

long long cross(Vec2 a, Vec2 b);

// Translation lattice spanned by two independent vectors.
struct Lattice {
    Vec2 g1;
    Vec2 g2;

    long long det() const { return cross(g1, g2); }
    // Is v an integer combination of g1, g2?
    bool contains(Vec2 v) const;
};

// The standard valuation on the square alphabet: R=(1,0), U=(0,1).
Vec2 step(char letter);

// Total displacement of a boundary word.
Vec2 span(std::string_view w);

// Vertices visited by w starting at `start`: |w|+1 points, first == start.
std::vector<Vec2> vertices(std::string_view w, Vec2 start = {0, 0});

// Shoelace area of a closed word; positive means counterclockwise.
long long signed_area(std::string_view w);

// A closed word is simple when it visits no vertex twice. The length-2 word
// w w^-1 doubles back over its single edge and is not simple either.
bool is_simple(std::string_view w);

enum class Location { Inside, Boundary, Outside };

// Point location for a simple closed word. The query point is given in
// half-units (doubled coordinates), so cell centers and edge midpoints are
// exact: the cell center (1/2, 1/2) is passed as (1, 1).
Location point_in_polygon(Vec2 p_half, std::string_view w, Vec2 start = {0, 0});

// Do translates of the simple closed word w along `lat` tile the plane?
// Verified exhaustively on every half-integer sample point within the square
// window [-radius, radius]^2: each must be either interior to exactly one
// translate or on the boundary of some translate. Use radius >= 2x the
// diameter of w. Throws AreaMismatch when |area(w)| != |det(lat)|, which
// already rules a tiling out.
bool tiling_cover_check(std::string_view w, const Lattice& lat, long long radius);

// Unit cells enclosed by a simple closed word, each named by its lower-left
// corner, sorted. Signed orientation does not matter.
std::vector<Vec2> enclosed_cells(std::string_view w, Vec2 start = {0, 0});

} // namespace dtile::geom
