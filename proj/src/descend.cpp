#include "dtile/descend.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "dtile/error.hpp"

namespace dtile::descend {

using geom::cross;
using transforms::Parity;
using words::Word;

WordChain greek_cross() {
    WordChain c;
    c.parts = {"R", "UR", "U", "LU", "L", "DL", "D", "RD"};
    return c;
}

std::array<Vec2, 8> u_vectors(const WordChain& c) {
    std::array<Vec2, 8> u;
    for (int i = 1; i <= 8; ++i) u[i - 1] = geom::span(c.part(i));
    return u;
}

std::array<Vec2, 4> s_vectors(const WordChain& c) {
    auto u = u_vectors(c);
    std::array<Vec2, 4> s;
    for (int i = 0; i < 4; ++i) s[i] = u[i] + u[(i + 1) % 8];
    return s;
}

namespace {

// 1-based cyclic access with period 8 and v_{i+4} = -v_i, on the stored
// quadruple v_1..v_4.
Vec2 at(const std::array<Vec2, 4>& v, int i) {
    int k = ((i - 1) % 8 + 8) % 8;
    return k < 4 ? v[k] : -v[k - 4];
}

int proto_index(ProtoTag t) {
    switch (t) {
        case ProtoTag::F1: return 1;
        case ProtoTag::F2: return 2;
        case ProtoTag::F3: return 3;
        case ProtoTag::F4: return 4;
        case ProtoTag::GStar: return 0;
    }
    fail(Errc::Internal, "bad proto tag");
}

} // namespace

const char* proto_tag_name(ProtoTag t) {
    switch (t) {
        case ProtoTag::F1: return "f1";
        case ProtoTag::F2: return "f2";
        case ProtoTag::F3: return "f3";
        case ProtoTag::F4: return "f4";
        case ProtoTag::GStar: return "g*";
    }
    fail(Errc::Internal, "bad proto tag");
}

std::array<Vec2, 4> lift_u(const std::array<Vec2, 4>& u, ProtoTag t) {
    std::array<Vec2, 4> v = u;
    if (t == ProtoTag::GStar) {
        for (int i = 1; i <= 4; ++i) v[i - 1] = -(at(u, i - 1) + at(u, i) + at(u, i + 1));
    } else {
        int i = proto_index(t);
        v[i - 1] = at(u, i - 1) + at(u, i) + at(u, i + 1);
    }
    return v;
}

std::array<Vec2, 4> lift_s(const std::array<Vec2, 4>& s, ProtoTag t) {
    std::array<Vec2, 4> out = s;
    if (t == ProtoTag::GStar) {
        for (int i = 1; i <= 4; ++i) out[i - 1] = -(at(s, i - 1) + at(s, i) + at(s, i + 1));
    } else {
        int i = proto_index(t);
        auto set = [&](int j, Vec2 val) {
            int k = ((j - 1) % 8 + 8) % 8;
            out[k % 4] = k < 4 ? val : -val;
        };
        set(i, at(s, i) + at(s, i + 1) - at(s, i + 2));
        set(i + 3, at(s, i + 3) + at(s, i + 2) - at(s, i + 1));
    }
    return out;
}

InvariantReport check_invariants(const Alphabet& ab, const WordChain& c) {
    InvariantReport rep;

    rep.centrally_symmetric = true;
    for (int i = 1; i <= 4; ++i)
        if (c.part(i + 4) != words::flip_letters(ab, c.part(i))) rep.centrally_symmetric = false;

    auto u8 = u_vectors(c);
    std::array<Vec2, 4> u{u8[0], u8[1], u8[2], u8[3]};
    auto s = s_vectors(c);

    rep.u_crossings_positive = true;
    rep.s_crossings_positive = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (cross(u[i], u[j]) <= 0) rep.u_crossings_positive = false;
            if (cross(s[i], s[j]) <= 0) rep.s_crossings_positive = false;
        }

    long long a13 = cross(s[0], s[2]);
    long long a24 = cross(s[1], s[3]);
    long long shoelace = geom::signed_area(c.concat());
    rep.area = a13;
    rep.area_consistent = a13 == a24 && a13 == shoelace && a13 > 0;
    return rep;
}

namespace {

WordChain apply_tag(const Alphabet& ab, const WordChain& c, Tag t) {
    switch (t) {
        case Tag::F1: return transforms::f_lift(ab, c, 1);
        case Tag::F2: return transforms::f_lift(ab, c, 2);
        case Tag::F3: return transforms::f_lift(ab, c, 3);
        case Tag::F4: return transforms::f_lift(ab, c, 4);
        case Tag::GStarOdd: return transforms::gstar_lift(ab, c, Parity::Odd);
        case Tag::GStarEven: return transforms::gstar_lift(ab, c, Parity::Even);
        default: fail(Errc::BadInput, "tag not used by the enumeration");
    }
}

} // namespace

std::vector<Descendant> enumerate_descendants(const Alphabet& ab, std::size_t max_length) {
    std::vector<Descendant> out;
    WordChain seed = greek_cross();
    if (seed.total_length() > max_length) return out;

    const std::array<Tag, 6> tags{Tag::F1, Tag::F3, Tag::F2,
                                  Tag::F4, Tag::GStarOdd, Tag::GStarEven};
    std::vector<Tag> descent;
    std::function<void(const WordChain&)> dfs = [&](const WordChain& c) {
        out.push_back({c, descent});
        for (Tag t : tags) {
            if (!descent.empty()) {
                // One representative per commutation class: inside a run of
                // {f1,f3} or {f2,f4} the indices may not decrease.
                Tag prev = descent.back();
                if (t == Tag::F1 && prev == Tag::F3) continue;
                if (t == Tag::F2 && prev == Tag::F4) continue;
            }
            WordChain child = apply_tag(ab, c, t);
            if (child.total_length() > max_length) continue;
            descent.push_back(t);
            dfs(child);
            descent.pop_back();
        }
    };
    dfs(seed);

    std::sort(out.begin(), out.end(), [](const Descendant& a, const Descendant& b) {
        size_t la = a.chain.total_length(), lb = b.chain.total_length();
        if (la != lb) return la < lb;
        return a.chain.concat() < b.chain.concat();
    });
    return out;
}

namespace {

// Start of part j (1-based) on the doubled grid, relative to the chain start.
Vec2 part_start_doubled(const WordChain& c, int j) {
    Vec2 p{0, 0};
    for (int k = 1; k < j; ++k) p = p + 2 * geom::span(c.part(k));
    return p;
}

// Center of the chain on the doubled grid: halfway between the start of part
// 1 and the start of part 5 (an exact point once doubled).
Vec2 center_doubled(const WordChain& c) {
    return geom::span(c.part(1)) + geom::span(c.part(2)) + geom::span(c.part(3)) +
           geom::span(c.part(4));
}

// The half-lattice shift between the two copies a lift at i creates.
Vec2 omega_doubled(const WordChain& c, int i) {
    auto s = s_vectors(c);
    return at(s, i + 1) - at(s, i + 2);
}

long long pack(Vec2 v) { return v.x * (1LL << 32) + v.y; }

} // namespace

bool f_good(const Alphabet& ab, const WordChain& c, int i) {
    if (i < 1 || i > 4) fail(Errc::IndexConvention, "lift index must be 1..4");
    const Word u_word = c.concat();
    if (!geom::is_simple(u_word)) return false;
    const WordChain v = transforms::f_lift(ab, c, i);
    const Word v_word = v.concat();
    if (!geom::is_simple(v_word)) return false;

    const Vec2 cu = center_doubled(c);
    const Vec2 cv = center_doubled(v);
    const Vec2 omega = omega_doubled(c, i);

    // The three parts the lift carries over sit shifted by omega once both
    // chains are centred; anything else means the bookkeeping broke.
    for (int j = i + 1; j <= i + 3; ++j) {
        if (v.part(j) != c.part(j)) fail(Errc::Internal, "lift altered a carried part");
        Vec2 pu = part_start_doubled(c, j) - cu;
        Vec2 pv = part_start_doubled(v, j) - cv;
        if (pv != pu + omega) fail(Errc::Internal, "carried part not at the shifted position");
    }

    // The opposite copy of part i+2 must land strictly inside the lift:
    // every interior vertex and every edge midpoint of the shifted copy.
    const Word& arc = c.part(i + 2);
    Vec2 cursor = part_start_doubled(c, i + 2) - cu - omega;
    for (size_t k = 0; k < arc.size(); ++k) {
        Vec2 half = geom::step(arc[k]);
        Vec2 mid = cursor + half;
        cursor = cursor + 2 * half;
        if (geom::point_in_polygon(mid + cv, v_word) != geom::Location::Inside) return false;
        if (k + 1 < arc.size() &&
            geom::point_in_polygon(cursor + cv, v_word) != geom::Location::Inside)
            return false;
    }
    return true;
}

bool f_good_isg(const Alphabet&, const WordChain& c, int i) {
    if (i < 1 || i > 4) fail(Errc::IndexConvention, "lift index must be 1..4");
    if (!geom::is_simple(c.concat())) return false;

    // Disjointness form: the whole copy at -omega must avoid the carried arc
    // i+1..i+3 of the copy at +omega. Rasterise at half-step resolution
    // (vertices and edge midpoints catch every possible contact of
    // axis-aligned unit edges); the two copies differ by 2*omega, so compare
    // point sets under that relative shift. Matches f_good whenever the
    // chain satisfies the orientation invariants; degenerate chains are only
    // judged correctly by the definitional route.
    const Vec2 rel = 2 * omega_doubled(c, i);
    std::unordered_set<long long> whole;
    Vec2 cursor{0, 0};
    whole.insert(pack(cursor));
    for (int j = 1; j <= 8; ++j)
        for (char ch : c.part(j)) {
            Vec2 half = geom::step(ch);
            whole.insert(pack(cursor + half));
            cursor = cursor + 2 * half;
            whole.insert(pack(cursor));
        }
    cursor = part_start_doubled(c, i + 1);
    auto meets_whole = [&](Vec2 p) { return whole.count(pack(p + rel)) != 0; };
    if (meets_whole(cursor)) return false;
    for (int j = i + 1; j <= i + 3; ++j)
        for (char ch : c.part(j)) {
            Vec2 half = geom::step(ch);
            if (meets_whole(cursor + half)) return false;
            cursor = cursor + 2 * half;
            if (meets_whole(cursor)) return false;
        }
    return true;
}

bool fully_f_good(const Alphabet& ab, const WordChain& c) {
    for (int i = 1; i <= 4; ++i) {
        if (!f_good(ab, c, i)) return false;
        int j = i + 2 > 4 ? i - 2 : i + 2;
        if (!f_good(ab, transforms::f_lift(ab, c, i), j)) return false;
    }
    return true;
}

bool fully_f_good_isg(const Alphabet& ab, const WordChain& c) {
    for (int i = 1; i <= 4; ++i) {
        if (!f_good_isg(ab, c, i)) return false;
        int j = i + 2 > 4 ? i - 2 : i + 2;
        if (!f_good_isg(ab, transforms::f_lift(ab, c, i), j)) return false;
    }
    return true;
}

std::vector<ProtoTag> proto_descent(const std::vector<Tag>& descent) {
    std::vector<ProtoTag> out;
    out.reserve(descent.size());
    for (Tag t : descent) switch (t) {
            case Tag::F1: out.push_back(ProtoTag::F1); break;
            case Tag::F2: out.push_back(ProtoTag::F2); break;
            case Tag::F3: out.push_back(ProtoTag::F3); break;
            case Tag::F4: out.push_back(ProtoTag::F4); break;
            case Tag::FOdd:
                out.push_back(ProtoTag::F1);
                out.push_back(ProtoTag::F3);
                break;
            case Tag::FEven:
                out.push_back(ProtoTag::F2);
                out.push_back(ProtoTag::F4);
                break;
            case Tag::GStarOdd:
            case Tag::GStarEven: out.push_back(ProtoTag::GStar); break;
            default: fail(Errc::BadInput, "bare g has no action on the vectors alone");
        }
    return out;
}

std::vector<ProtoTag> recover_proto_descent(const std::array<Vec2, 4>& u_in) {
    const std::array<Vec2, 4> target{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}}};
    std::array<Vec2, 4> u = u_in;
    auto weight = [](const std::array<Vec2, 4>& v) {
        long long w = 0;
        for (Vec2 p : v) w += std::abs(p.x) + std::abs(p.y);
        return w;
    };

    std::vector<ProtoTag> trail;
    while (u != target) {
        long long u12 = cross(u[0], u[1]), u13 = cross(u[0], u[2]), u14 = cross(u[0], u[3]);
        long long u23 = cross(u[1], u[2]), u24 = cross(u[1], u[3]), u34 = cross(u[2], u[3]);

        // Which lift came last? Each one leaves a signature among the cross
        // products of the u vectors; test in index order, star last.
        ProtoTag t;
        if (u13 > u23 && u13 > u34 && u12 > u24 && u14 > u24)
            t = ProtoTag::F1;
        else if (u24 > u34 && u24 > u14 && u23 > u13 && u12 > u13)
            t = ProtoTag::F2;
        else if (u13 > u14 && u13 > u12 && u34 > u24 && u23 > u24)
            t = ProtoTag::F3;
        else if (u24 > u12 && u24 > u23 && u14 > u13 && u34 > u13)
            t = ProtoTag::F4;
        else if (u13 > u12 && u13 > u23 && u13 > u34 && u13 > u14 && u24 > u12 &&
                 u24 > u23 && u24 > u34 && u24 > u14)
            t = ProtoTag::GStar;
        else
            fail(Errc::NotReachable, "no lift signature matches the u vectors");

        std::array<Vec2, 4> prev = u;
        if (t == ProtoTag::GStar) {
            // v_i = -(u_{i-1}+u_i+u_{i+1}) inverts to u_i = v_i - v_{i-1} - v_{i+1}.
            for (int i = 1; i <= 4; ++i)
                prev[i - 1] = at(u, i) - at(u, i - 1) - at(u, i + 1);
        } else {
            int i = proto_index(t);
            prev[i - 1] = at(u, i) - at(u, i - 1) - at(u, i + 1);
        }
        if (weight(prev) >= weight(u))
            fail(Errc::NotReachable, "undoing the lift does not shrink the chain");
        u = prev;
        trail.push_back(t);
    }
    std::reverse(trail.begin(), trail.end());
    return trail;
}

std::vector<ProtoTag> recover_proto_descent(const WordChain& c) {
    auto u8 = u_vectors(c);
    return recover_proto_descent({u8[0], u8[1], u8[2], u8[3]});
}

namespace {

// Run kind for commutation: 1 = {f1,f3}, 2 = {f2,f4}, 0 = breaks runs.
template <class T>
int run_kind(T t);

template <>
int run_kind<Tag>(Tag t) {
    if (t == Tag::F1 || t == Tag::F3) return 1;
    if (t == Tag::F2 || t == Tag::F4) return 2;
    return 0;
}

template <>
int run_kind<ProtoTag>(ProtoTag t) {
    if (t == ProtoTag::F1 || t == ProtoTag::F3) return 1;
    if (t == ProtoTag::F2 || t == ProtoTag::F4) return 2;
    return 0;
}

template <class T>
std::vector<T> sort_runs(std::vector<T> descent) {
    size_t i = 0;
    while (i < descent.size()) {
        int kind = run_kind(descent[i]);
        size_t j = i + 1;
        if (kind != 0)
            while (j < descent.size() && run_kind(descent[j]) == kind) ++j;
        std::sort(descent.begin() + i, descent.begin() + j);
        i = j;
    }
    return descent;
}

} // namespace

std::vector<Tag> canonical_descent(std::vector<Tag> descent) { return sort_runs(std::move(descent)); }

std::vector<ProtoTag> canonical_descent(std::vector<ProtoTag> descent) {
    return sort_runs(std::move(descent));
}

bool is_clover_descent(const std::vector<Tag>& descent) {
    long long c1 = 0, c3 = 0, c2 = 0, c4 = 0;
    int kind = 0;
    auto flush = [&]() {
        bool good = c1 == c3 && c2 == c4;
        c1 = c3 = c2 = c4 = 0;
        return good;
    };
    for (Tag t : descent) {
        int k = run_kind(t);
        if (t == Tag::FOdd) k = 1;
        if (t == Tag::FEven) k = 2;
        if (k != kind && !flush()) return false;
        kind = k;
        switch (t) {
            case Tag::F1: ++c1; break;
            case Tag::F3: ++c3; break;
            case Tag::F2: ++c2; break;
            case Tag::F4: ++c4; break;
            case Tag::FOdd: ++c1, ++c3; break;
            case Tag::FEven: ++c2, ++c4; break;
            default: break; // star and bare g lifts keep the symmetry
        }
    }
    return flush();
}

} // namespace dtile::descend
