#include "dtile/geom.hpp"

#include <algorithm>
#include <unordered_set>

namespace dtile::geom {

long long cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

bool Lattice::contains(Vec2 v) const {
    long long d = det();
    if (d == 0) fail(Errc::BadInput, "degenerate lattice");
    long long num_a = cross(v, g2);
    long long num_b = cross(g1, v);
    return num_a % d == 0 && num_b % d == 0;
}

Vec2 step(char letter) {
    switch (letter) {
    case 'R': return {1, 0};
    case 'L': return {-1, 0};
    case 'U': return {0, 1};
    case 'D': return {0, -1};
    }
    fail(Errc::BadInput, std::string("not a boundary letter: '") + letter + "'");
}

Vec2 span(std::string_view w) {
    Vec2 s;
    for (char c : w) s = s + step(c);
    return s;
}

std::vector<Vec2> vertices(std::string_view w, Vec2 start) {
    std::vector<Vec2> vs;
    vs.reserve(w.size() + 1);
    vs.push_back(start);
    for (char c : w) vs.push_back(vs.back() + step(c));
    return vs;
}

long long signed_area(std::string_view w) {
    if (span(w) != Vec2{}) fail(Errc::NotClosed, "signed_area needs a closed word");
    long long twice = 0;
    Vec2 p{0, 0};
    for (char c : w) {
        Vec2 q = p + step(c);
        twice += p.x * q.y - q.x * p.y;
        p = q;
    }
    if (twice % 2 != 0) fail(Errc::Internal, "odd shoelace sum on a lattice loop");
    return twice / 2;
}

namespace {

struct Vec2Hash {
    size_t operator()(const Vec2& v) const {
        return std::hash<long long>()(v.x * 1000003LL + v.y);
    }
};

} // namespace

bool is_simple(std::string_view w) {
    if (span(w) != Vec2{}) fail(Errc::NotClosed, "is_simple needs a closed word");
    if (w.size() == 2) return false; // w w^-1: the lone edge is walked twice
    std::unordered_set<Vec2, Vec2Hash> seen;
    Vec2 p{0, 0};
    seen.insert(p);
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        p = p + step(w[i]);
        if (!seen.insert(p).second) return false;
    }
    return true;
}

namespace {

// Doubled coordinates throughout: polygon vertices land on even points and
// half-integer queries stay integral.
std::vector<Vec2> doubled_vertices(std::string_view w, Vec2 start) {
    auto vs = vertices(w, start);
    for (Vec2& v : vs) v = 2 * v;
    return vs;
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
    if (a.x == b.x) {
        return p.x == a.x && p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
    }
    return p.y == a.y && p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x);
}

Location locate(Vec2 p, const std::vector<Vec2>& poly) {
    bool inside = false;
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i], b = poly[i + 1];
        if (on_segment(p, a, b)) return Location::Boundary;
        if (a.x == b.x) { // vertical edge, horizontal ray to +x
            long long lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
            if (p.x < a.x && lo <= p.y && p.y < hi) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

} // namespace

Location point_in_polygon(Vec2 p_half, std::string_view w, Vec2 start) {
    return locate(p_half, doubled_vertices(w, start));
}

bool tiling_cover_check(std::string_view w, const Lattice& lat, long long radius) {
    long long area = signed_area(w);
    long long det = lat.det();
    if (det == 0) fail(Errc::BadInput, "degenerate lattice");
    if (std::abs(area) != std::abs(det))
        fail(Errc::AreaMismatch, "tile area does not match lattice determinant");

    auto vs = vertices(w);
    Vec2 lo = vs[0], hi = vs[0];
    for (Vec2 v : vs) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
    }
    long long diam = std::max(hi.x - lo.x, hi.y - lo.y);
    long long reach = radius + diam + 1;

    // Translates t = alpha g1 + beta g2 with |t| small enough to touch the
    // window; solve the coefficient bounds exactly from the inverse matrix.
    long long g1m = std::max(std::abs(lat.g1.x), std::abs(lat.g1.y));
    long long g2m = std::max(std::abs(lat.g2.x), std::abs(lat.g2.y));
    long long amax = (2 * reach * g2m) / std::abs(det) + 2;
    long long bmax = (2 * reach * g1m) / std::abs(det) + 2;

    // Coverage accumulators over the doubled window grid.
    long long w2 = 2 * radius;
    auto idx = [w2](Vec2 p) {
        return static_cast<size_t>((p.y + w2) * (2 * w2 + 1) + (p.x + w2));
    };
    std::vector<int> interior(static_cast<size_t>((2 * w2 + 1) * (2 * w2 + 1)), 0);
    std::vector<char> boundary(interior.size(), 0);

    for (long long a = -amax; a <= amax; ++a) {
        for (long long b = -bmax; b <= bmax; ++b) {
            Vec2 t = a * lat.g1 + b * lat.g2;
            if (std::abs(t.x) > reach || std::abs(t.y) > reach) continue;
            auto poly = doubled_vertices(w, t);
            long long xlo = std::max(2 * (lo.x + t.x), -w2), xhi = std::min(2 * (hi.x + t.x), w2);
            long long ylo = std::max(2 * (lo.y + t.y), -w2), yhi = std::min(2 * (hi.y + t.y), w2);
            for (long long y = ylo; y <= yhi; ++y) {
                for (long long x = xlo; x <= xhi; ++x) {
                    switch (locate({x, y}, poly)) {
                    case Location::Inside: interior[idx({x, y})]++; break;
                    case Location::Boundary: boundary[idx({x, y})] = 1; break;
                    case Location::Outside: break;
                    }
                }
            }
        }
    }

    for (long long y = -w2; y <= w2; ++y) {
        for (long long x = -w2; x <= w2; ++x) {
            int in = interior[idx({x, y})];
            bool on = boundary[idx({x, y})] != 0;
            if (on ? in != 0 : in != 1) return false;
        }
    }
    return true;
}

std::vector<Vec2> enclosed_cells(std::string_view w, Vec2 start) {
    if (!is_simple(w)) fail(Errc::NotSimple, "enclosed_cells needs a simple word");
    auto vs = vertices(w, start);
    Vec2 lo = vs[0], hi = vs[0];
    for (Vec2 v : vs) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
    }
    auto poly = doubled_vertices(w, start);
    std::vector<Vec2> cells;
    for (long long y = lo.y; y < hi.y; ++y)
        for (long long x = lo.x; x < hi.x; ++x)
            if (locate({2 * x + 1, 2 * y + 1}, poly) == Location::Inside) cells.push_back({x, y});
    std::sort(cells.begin(), cells.end());
    return cells;
}

} // namespace dtile::geom
