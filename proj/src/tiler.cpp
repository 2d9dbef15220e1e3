#include "dtile/tiler.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "dtile/error.hpp"

namespace dtile::tiler {

using geom::Lattice;
using words::reverse;

bool block_valid(const Alphabet& ab, const Block& blk) {
    if (blk.a.empty() || blk.b.empty()) return false;
    ab.check_word(blk.a);
    ab.check_word(blk.b);
    Word cell = blk.a + blk.b + reverse(ab, blk.a) + reverse(ab, blk.b);
    return geom::is_simple(cell);
}

namespace {

words::Substitution block_substitution(const Alphabet& ab, const Block& blk) {
    words::Substitution sub(ab, ab);
    sub.map('R', blk.a);
    sub.map('U', blk.b);
    return sub;
}

} // namespace

WordChain deform(const Alphabet& ab, const WordChain& c, const Block& blk) {
    words::Substitution sub = block_substitution(ab, blk);
    WordChain out;
    for (int i = 0; i < 8; ++i) out.parts[i] = sub.apply(c.parts[i]);
    return out;
}

Word deform_word(const Alphabet& ab, std::string_view w, const Block& blk) {
    return block_substitution(ab, blk).apply(w);
}

Word canonical_boundary_word(const Alphabet& ab, std::string_view w) {
    ab.check_word(w);
    long long area = geom::signed_area(w);
    if (area == 0) fail(Errc::BadInput, "curve encloses nothing, no canonical orientation");
    Word norm(w);
    if (area < 0) norm = reverse(ab, norm);

    auto verts = geom::vertices(norm, {0, 0});
    verts.pop_back(); // closed: last repeats the first
    size_t best = 0;
    for (size_t i = 1; i < verts.size(); ++i)
        if (verts[i] < verts[best]) best = i;
    return words::cyclic_shift(norm, static_cast<long long>(best));
}

namespace {

// Deterministic letter order derived from the pair structure.
std::string letter_order(const Alphabet& ab) {
    std::string order;
    for (char r : ab.representatives()) {
        order.push_back(r);
        order.push_back(ab.reverse_letter(r));
    }
    return order;
}

void each_word_of_length(const std::string& order, size_t len,
                         const std::function<void(const Word&)>& fn) {
    Word w(len, order[0]);
    std::vector<size_t> idx(len, 0);
    while (true) {
        fn(w);
        size_t k = len;
        while (k > 0 && idx[k - 1] + 1 == order.size()) {
            idx[k - 1] = 0;
            w[k - 1] = order[0];
            --k;
        }
        if (k == 0) return;
        ++idx[k - 1];
        w[k - 1] = order[idx[k - 1]];
    }
}

} // namespace

std::vector<CensusEntry> generate_census(const Alphabet& ab, std::size_t bound) {
    const std::string order = letter_order(ab);
    std::map<Word, CensusEntry> by_word;

    for (const descend::Descendant& d : descend::enumerate_descendants(ab, bound)) {
        const Word base = d.chain.concat();
        size_t n_rl = 0, n_ud = 0;
        for (char ch : base)
            if (ch == 'R' || ch == 'L')
                ++n_rl;
            else
                ++n_ud;

        for (size_t la = 1; n_rl * la + n_ud <= bound; ++la)
            for (size_t lb = 1; n_rl * la + n_ud * lb <= bound; ++lb)
                each_word_of_length(order, la, [&](const Word& wa) {
                    each_word_of_length(order, lb, [&](const Word& wb) {
                        Block blk{wa, wb};
                        if (!block_valid(ab, blk)) return;
                        WordChain def = deform(ab, d.chain, blk);
                        Word w = def.concat();
                        if (!geom::is_simple(w)) return;
                        Word canon = canonical_boundary_word(ab, w);
                        // Several recipes can hit the same tile: a reflecting
                        // block on one descendant lands on the mirror descendant
                        // with a plainer block. Keep the smallest block, sizes
                        // first and letters in pair order (R before L before U
                        // before D), so the recorded recipe is the
                        // axis-preserving one that decompose recovers.
                        auto ranked = [&](const Word& x) {
                            Word r = x;
                            for (char& ch : r) ch = static_cast<char>(order.find(ch));
                            return r;
                        };
                        auto it = by_word.find(canon);
                        if (it != by_word.end()) {
                            const Block& old = it->second.block;
                            if (std::tuple(wa.size() + wb.size(), ranked(wa), ranked(wb)) >=
                                std::tuple(old.a.size() + old.b.size(), ranked(old.a), ranked(old.b)))
                                return;
                            by_word.erase(it);
                        }
                        CensusEntry e;
                        e.word = canon;
                        e.descent = d.descent;
                        e.block = blk;
                        e.type = chains::type_of(ab, def);
                        e.sides = descend::s_vectors(def);
                        e.area = geom::signed_area(canon);
                        by_word.emplace(std::move(canon), std::move(e));
                    });
                });
    }

    std::vector<CensusEntry> out;
    out.reserve(by_word.size());
    for (auto& [w, e] : by_word) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    return out;
}

namespace {

long long pack(Vec2 v) { return v.x * (1LL << 32) + v.y; }

void sap_dfs(Vec2 pos, int depth, int perimeter, Word& cur,
             std::unordered_set<long long>& visited, std::vector<Word>& out) {
    for (char s : {'R', 'U', 'L', 'D'}) {
        Vec2 v = pos + geom::step(s);
        if (v == Vec2{0, 0}) {
            if (depth + 1 == perimeter) {
                cur.push_back(s);
                out.push_back(cur);
                cur.pop_back();
            }
            continue;
        }
        if (depth + 1 >= perimeter) continue;
        // Root the polygon: no vertex below the x axis, none left of the
        // origin on it. Closing in time bounds the excursion.
        if (!(v.y > 0 || (v.y == 0 && v.x >= 0))) continue;
        if (std::abs(v.x) + std::abs(v.y) > perimeter - depth - 1) continue;
        if (!visited.insert(pack(v)).second) continue;
        cur.push_back(s);
        sap_dfs(v, depth + 1, perimeter, cur, visited, out);
        cur.pop_back();
        visited.erase(pack(v));
    }
}

} // namespace

std::vector<Word> sap_enumerate(int perimeter) {
    if (perimeter < 4 || perimeter % 2 != 0)
        fail(Errc::BadInput, "perimeter must be an even number >= 4");
    std::vector<Word> out;
    Word cur = "R";
    std::unordered_set<long long> visited{pack({0, 0}), pack({1, 0})};
    sap_dfs({1, 0}, 1, perimeter, cur, visited, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> oracle_enumerate(std::size_t bound, std::size_t cap) {
    if (bound > cap)
        fail(Errc::CapExceeded, "perimeter bound " + std::to_string(bound) +
                                    " exceeds the cap " + std::to_string(cap));
    std::vector<Word> out;
    for (int p = 4; p <= static_cast<int>(bound); p += 2)
        for (Word& w : sap_enumerate(p))
            if (transforms::decompose(w).is_double_tile()) out.push_back(std::move(w));
    return out;
}

DoubleTileReport verify_double_tile(const Alphabet& ab, std::string_view w, long long radius) {
    DoubleTileReport rep;
    ab.check_word(w);
    long long area = geom::signed_area(w); // rejects open words
    Word norm(w);
    if (area < 0) {
        norm = reverse(ab, norm);
        area = -area;
    }
    rep.normalized = norm;
    rep.area = area;

    transforms::DecomposeResult dec = transforms::decompose(norm);
    rep.certificate = dec.certificate;
    rep.reject = dec.reject;
    if (!dec.is_double_tile()) return rep;

    WordChain chain = transforms::apply_descent(
        ab, transforms::substituted_cross(ab, dec.certificate->root_x, dec.certificate->root_y),
        dec.certificate->descent);
    rep.sides = descend::s_vectors(chain);

    if (radius <= 0) {
        auto verts = geom::vertices(norm, {0, 0});
        Vec2 lo = verts[0], hi = verts[0];
        for (Vec2 v : verts) {
            lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
            hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
        }
        radius = (hi.x - lo.x) + (hi.y - lo.y);
    }
    rep.odd_lattice_tiles = geom::tiling_cover_check(norm, {rep.sides[0], rep.sides[2]}, radius);
    rep.even_lattice_tiles = geom::tiling_cover_check(norm, {rep.sides[1], rep.sides[3]}, radius);
    rep.is_double_tile = rep.odd_lattice_tiles && rep.even_lattice_tiles;
    return rep;
}

namespace {

struct Panel {
    Lattice lat;
    std::vector<Vec2> marks; // division points of this tiling
};

void render_panel(std::ostringstream& svg, const std::vector<Vec2>& verts, const Panel& panel,
                  long long offset_x, long long offset_y, int scale) {
    // SVG y runs downward; flip with a translate the caller folded into
    // offset_y and negate here.
    auto px = [&](Vec2 p) {
        return std::to_string(offset_x + p.x * scale) + "," +
               std::to_string(offset_y - p.y * scale);
    };
    for (long long beta = -2; beta <= 2; ++beta)
        for (long long alpha = -2; alpha <= 2; ++alpha) {
            Vec2 t = alpha * panel.lat.g1 + beta * panel.lat.g2;
            bool base = alpha == 0 && beta == 0;
            svg << "<polygon points=\"";
            for (size_t i = 0; i + 1 < verts.size(); ++i) svg << px(verts[i] + t) << " ";
            svg << "\" fill=\"" << (base ? "#5b8fc9" : "#e6e6e6")
                << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
        }
    for (Vec2 m : panel.marks)
        svg << "<circle cx=\"" << offset_x + m.x * scale << "\" cy=\"" << offset_y - m.y * scale
            << "\" r=\"3\" fill=\"#b03a2e\"/>\n";
}

} // namespace

std::string render_svg(const Alphabet& ab, std::string_view w) {
    DoubleTileReport rep = verify_double_tile(ab, w);
    if (!rep.is_double_tile)
        fail(Errc::BadInput, rep.reject ? std::string("not a double tile: ") +
                                              transforms::reject_name(*rep.reject)
                                        : "not a double tile");

    const auto& cert = *rep.certificate;
    auto verts = geom::vertices(rep.normalized, {0, 0});

    // Division points: the certificate chain starts `shift` letters into the
    // normalized word; the eight part boundaries follow from the part spans.
    WordChain chain = transforms::apply_descent(
        ab, transforms::substituted_cross(ab, cert.root_x, cert.root_y), cert.descent);
    Vec2 p = verts[static_cast<size_t>(cert.shift)];
    std::array<Vec2, 8> division;
    for (int i = 1; i <= 8; ++i) {
        division[i - 1] = p;
        p = p + geom::span(chain.part(i));
    }

    Panel odd{{rep.sides[0], rep.sides[2]}, {division[0], division[2], division[4], division[6]}};
    Panel even{{rep.sides[1], rep.sides[3]}, {division[1], division[3], division[5], division[7]}};

    const int scale = 16;
    long long ext = 0;
    for (Vec2 v : verts)
        for (const Panel& pan : {odd, even})
            for (long long beta = -2; beta <= 2; ++beta)
                for (long long alpha = -2; alpha <= 2; ++alpha) {
                    Vec2 q = v + alpha * pan.lat.g1 + beta * pan.lat.g2;
                    ext = std::max({ext, std::abs(q.x), std::abs(q.y)});
                }
    const long long half = ext * scale + scale;
    const long long panel_w = 2 * half;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * panel_w + 3 * scale
        << "\" height=\"" << panel_w + 2 * scale << "\">\n";
    render_panel(svg, verts, odd, scale + half, scale + half, scale);
    render_panel(svg, verts, even, 2 * scale + panel_w + half, scale + half, scale);
    svg << "</svg>\n";
    return svg.str();
}

} // namespace dtile::tiler
