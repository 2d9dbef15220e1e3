// Release gate for the double-tile calculus. Nine criteria, one PASS/FAIL
// line each, exit status = number of failures. Each criterion carries a
// wall-clock budget (a wide multiple of the observed runtime) so asymptotic
// regressions surface here instead of in a user's terminal. Expected values
// that cannot be recomputed on the spot live in tests/golden/.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtile/chains.hpp"
#include "dtile/descend.hpp"
#include "dtile/error.hpp"
#include "dtile/gaussian.hpp"
#include "dtile/geom.hpp"
#include "dtile/tiler.hpp"
#include "dtile/transforms.hpp"
#include "dtile/words.hpp"

#ifndef DTILE_GOLDEN_DIR
#error "DTILE_GOLDEN_DIR must point at tests/golden"
#endif

using namespace dtile;
using chains::TypeQuad;
using chains::WordChain;
using geom::Vec2;
using transforms::Parity;
using transforms::Tag;
using words::Word;

namespace {

const words::Alphabet& sq() { return words::Alphabet::square(); }
const words::Alphabet& abc() { return words::Alphabet::abc(); }

constexpr std::string_view kCross = "RURULULDLDRD";

std::string golden_path(const char* name) {
    return std::string(DTILE_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Collects failure notes for one criterion; empty means PASS.
struct Check {
    std::vector<std::string> notes;

    void req(bool ok, const std::string& what) {
        if (!ok) notes.push_back(what);
    }

    // For violation counters over exhaustive sweeps: one note, not thousands.
    void count_zero(long long n, const std::string& what) {
        if (n != 0) notes.push_back(what + ": " + std::to_string(n) + " violation(s)");
    }
};

// --- expected type maps, recomputed from the part-length recurrences -------

TypeQuad f_type(const TypeQuad& t, int i) {
    TypeQuad r = t;
    r.a[static_cast<size_t>(i - 1)] = t[i - 1] + t[i] + t[i + 1];
    return r;
}

TypeQuad g_type(const TypeQuad& t, Parity p) {
    TypeQuad r = t;
    for (int i = (p == Parity::Odd ? 1 : 2); i <= 4; i += 2)
        r.a[static_cast<size_t>(i - 1)] = t[i - 1] + t[i + 1] - t[i];
    return r;
}

// Odd star: odd parts come from five-part slices, even parts from three-part
// ones; the even star swaps the roles.
TypeQuad gstar_type(const TypeQuad& t, Parity p) {
    TypeQuad r{};
    for (int i = 1; i <= 4; ++i) {
        bool five = (i % 2 == 1) == (p == Parity::Odd);
        r.a[static_cast<size_t>(i - 1)] = t[i - 1] + t[i] + t[i + 1] + (five ? 2 * t[i + 2] : 0);
    }
    return r;
}

// --- criteria ---------------------------------------------------------------

void criterion_cross(Check& c) {
    WordChain cross = descend::greek_cross();
    c.req(chains::is_interleaved_double_chain(sq(), cross), "cross does not satisfy the chain equations");
    c.req(chains::type_of(sq(), cross) == TypeQuad{{1, 2, 1, 2}}, "cross type is not (1,2,1,2)");

    Word w = cross.concat();
    c.req(w == kCross, "cross boundary word changed");
    c.req(geom::signed_area(w) == 5, "cross area is not 5");

    auto s = descend::s_vectors(cross);
    c.req(s == std::array<Vec2, 4>{{{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}}, "cross side vectors changed");
    c.req(geom::tiling_cover_check(w, geom::Lattice{{2, 1}, {-1, 2}}, 8),
          "odd knight-move lattice does not tile around the cross");
    c.req(geom::tiling_cover_check(w, geom::Lattice{{1, 2}, {-2, 1}}, 8),
          "even knight-move lattice does not tile around the cross");
}

void criterion_algebra(Check& c) {
    auto all = descend::enumerate_descendants(sq(), 60);
    c.req(all.size() == 251, "descendant count at bound 60 is " + std::to_string(all.size()) +
                                 ", expected 251");

    long long bad_roundtrip = 0, bad_f_type = 0, bad_involution = 0, bad_g_type = 0;
    long long bad_star_route = 0, bad_star_type = 0;
    for (const auto& d : all) {
        TypeQuad t = chains::type_of(sq(), d.chain);
        for (int i = 1; i <= 4; ++i) {
            WordChain up = transforms::f_lift(sq(), d.chain, i);
            if (transforms::f_reduce(sq(), up, i) != d.chain) ++bad_roundtrip;
            if (chains::type_of(sq(), up) != f_type(t, i)) ++bad_f_type;
        }
        for (Parity p : {Parity::Odd, Parity::Even}) {
            if (transforms::g_admissible(sq(), d.chain, p)) {
                WordChain g1 = transforms::g_transform(sq(), d.chain, p);
                if (transforms::g_transform(sq(), g1, p) != d.chain) ++bad_involution;
                if (chains::type_of(sq(), g1) != g_type(t, p)) ++bad_g_type;
            }
            // The star lift must equal g after the opposite f pair.
            int fa = p == Parity::Odd ? 2 : 1;
            WordChain pair = transforms::f_lift(sq(), transforms::f_lift(sq(), d.chain, fa), fa + 2);
            WordChain star = transforms::gstar_lift(sq(), d.chain, p);
            if (star != transforms::g_transform(sq(), pair, p)) ++bad_star_route;
            if (chains::type_of(sq(), star) != gstar_type(t, p)) ++bad_star_type;
        }
    }
    c.count_zero(bad_roundtrip, "f_reduce(f_lift(U)) != U");
    c.count_zero(bad_f_type, "f lift type recurrence");
    c.count_zero(bad_involution, "g(g(U)) != U");
    c.count_zero(bad_g_type, "g transform type recurrence");
    c.count_zero(bad_star_route, "star lift differs from its g-after-f-pair route");
    c.count_zero(bad_star_type, "star lift type recurrence");
}

void criterion_positive(Check& c) {
    auto all = descend::enumerate_descendants(sq(), 60);
    long long not_simple = 0, bad_invariants = 0;
    for (const auto& d : all) {
        if (!geom::is_simple(d.chain.concat())) ++not_simple;
        auto rep = descend::check_invariants(sq(), d.chain);
        if (!rep.all() || rep.area <= 0) ++bad_invariants;
    }
    c.count_zero(not_simple, "descendant with a self-intersecting boundary");
    c.count_zero(bad_invariants, "descendant failing symmetry/positivity/area invariants");
}

void criterion_keystone(Check& c) {
    c.req(tiler::generate_census(sq(), 10).empty(), "census below the cross is not empty");

    auto smallest = tiler::generate_census(sq(), 12);
    c.req(smallest.size() == 1 && smallest[0].word == kCross,
          "census at bound 12 is not exactly the cross");

    auto census = tiler::generate_census(sq(), 20);
    auto brute = tiler::oracle_enumerate(20);
    std::vector<Word> generated;
    for (const auto& e : census) generated.push_back(e.word);
    c.req(generated == brute, "generator and brute-force search disagree at bound 20 (" +
                                  std::to_string(generated.size()) + " vs " +
                                  std::to_string(brute.size()) + " words)");

    std::map<std::string, long long> hist;
    for (int len : {12, 14, 16, 18, 20}) hist[std::to_string(len)] = 0;
    for (const auto& e : census) ++hist[std::to_string(e.word.size())];

    auto golden = nlohmann::json::parse(read_file(golden_path("census_counts.json")));
    for (const auto& [len, n] : golden.items())
        c.req(hist.count(len) == 1 && hist[len] == n.get<long long>(),
              "census count at perimeter " + len + " differs from golden");
    c.req(golden.size() == hist.size(), "golden histogram covers different perimeters");
}

void criterion_roundtrip(Check& c) {
    auto census = tiler::generate_census(sq(), 20);
    c.req(!census.empty(), "census is empty");
    for (const auto& e : census) {
        auto res = transforms::decompose(e.word);
        if (!res.is_double_tile()) {
            c.req(false, e.word + ": decompose rejects a generated tile");
            continue;
        }
        const auto& cert = *res.certificate;
        WordChain rebuilt = transforms::apply_descent(
            sq(), transforms::substituted_cross(sq(), cert.root_x, cert.root_y), cert.descent);
        c.req(words::cyclic_shift(e.word, cert.shift) == rebuilt.concat(),
              e.word + ": certificate shift does not reproduce the input");
        c.req(tiler::canonical_boundary_word(sq(), rebuilt.concat()) == e.word,
              e.word + ": replayed descent yields a different tile");
        c.req(descend::canonical_descent(cert.descent) == descend::canonical_descent(e.descent),
              e.word + ": recovered descent differs beyond commutation order");
    }
}

void criterion_negative(Check& c) {
    // The odd star lift of the root R:-:U:-:L:-:D:- self-intersects stably.
    WordChain gr = transforms::gstar_lift(sq(), transforms::root_chain(sq(), "R", "U"), Parity::Odd);
    c.req(chains::format_chain(gr) == "DLU:LD:RDL:DR:URD:RU:LUR:UL",
          "odd star lift of the root changed");
    auto hit = chains::find_stable_self_intersection(sq(), gr);
    c.req(hit.has_value(), "no stable self-intersection in the lifted root");
    if (hit) {
        c.req(hit->slice_index == 1 && hit->start == 2 && hit->length == 4,
              "stable self-intersection moved");
        c.req(chains::slice(gr, 1, 4).substr(2, 4) == "ULDR", "stable witness is not ULDR");
    }

    // Genuine loops all instantiate one template, and that template contains
    // a combinatorial self-intersection which survives every substitution.
    WordChain loop = chains::parse_chain(abc(), "ABC:bA:B:cb:aBc:ba:B:Cb");
    c.req(words::has_combinatorial_self_intersection(abc(), loop.concat()),
          "loop template lost its self-intersection");

    const struct {
        const char *a, *b, *cc;
    } valuations[] = {{"R", "U", "R"}, {"RU", "U", "RU"}, {"R", "UU", "RRU"}};
    for (const auto& v : valuations) {
        words::Substitution zeta(abc(), sq());
        zeta.map('A', v.a);
        zeta.map('B', v.b);
        zeta.map('C', v.cc);
        Word inst = zeta.apply(loop.concat());
        c.req(words::has_combinatorial_self_intersection(sq(), inst),
              std::string("loop instance [") + v.a + "," + v.b + "," + v.cc +
                  "] has no self-intersection");
    }

    // ... and the fully substituted loop reduces to a genuine loop, not a root.
    WordChain sq_loop = chains::parse_chain(sq(), "RUR:DR:U:LD:LUL:DL:U:RD");
    c.req(transforms::reduce_to_base(sq(), sq_loop).hit_loop(),
          "substituted loop reduced to a root");

    // One f3 lift later the self-intersection is gone: the obstruction is not
    // hereditary, which is why loops need the stable machinery above.
    WordChain lifted = transforms::f_lift(abc(), loop, 3);
    c.req(lifted == chains::parse_chain(abc(), "ABC:bA:BcbAB:cb:aBc:ba:BCbaB:Cb"),
          "f3 lift of the loop template changed");
    c.req(words::combinatorial_self_intersections(abc(), lifted.concat()).empty(),
          "f3 lift of the loop template still self-intersects");

    // Every non-interleaved chain with matching even part lengths is an
    // instance of the cube template A:B:C:B^-1:A^-1:B:C^-1:B^-1 and is caught.
    std::vector<Word> outer{""}, inner;
    for (char x : sq().letters()) {
        outer.emplace_back(1, x);
        inner.emplace_back(1, x);
        for (char y : sq().letters()) {
            outer.push_back({x, y});
            inner.push_back({x, y});
        }
    }
    long long swept = 0, not_ni = 0, undetected = 0;
    for (const Word& a : outer)
        for (const Word& b : inner)
            for (const Word& cc : outer) {
                WordChain cube;
                cube.part(1) = a;
                cube.part(2) = b;
                cube.part(3) = cc;
                cube.part(4) = words::reverse(sq(), b);
                cube.part(5) = words::reverse(sq(), a);
                cube.part(6) = b;
                cube.part(7) = words::reverse(sq(), cc);
                cube.part(8) = words::reverse(sq(), b);
                ++swept;
                if (!chains::is_non_interleaved_double_chain(sq(), cube)) {
                    ++not_ni;
                    continue;
                }
                if (!chains::detect_theta_cube(sq(), cube)) ++undetected;
            }
    c.req(swept == 8820, "cube sweep size changed");
    c.count_zero(not_ni, "cube template instance not a non-interleaved chain");
    c.count_zero(undetected, "undetected cube instance");

    // Unequal even parts instead give a located balanced witness.
    WordChain w = chains::parse_chain(sq(), "R:UR:U:-:L:DL:D:-");
    c.req(!chains::detect_theta_cube(sq(), w), "witness chain misread as a cube");
    auto ev = chains::noninterleaved_witness(sq(), w);
    c.req(ev.witness == "RULD" && ev.start == 2 && ev.length == 4,
          "non-interleaved witness moved");
    c.req(w.concat().substr(2, 4) == "RULD", "witness does not sit in the concatenation");
}

void criterion_goodness(Check& c) {
    auto all = descend::enumerate_descendants(sq(), 44);
    c.req(all.size() == 102, "descendant count at bound 44 is " + std::to_string(all.size()) +
                                 ", expected 102");
    long long not_good = 0, not_good_isg = 0, route_disagree = 0;
    for (const auto& d : all) {
        if (!descend::fully_f_good(sq(), d.chain)) ++not_good;
        if (!descend::fully_f_good_isg(sq(), d.chain)) ++not_good_isg;
        for (int i = 1; i <= 4; ++i)
            if (descend::f_good(sq(), d.chain, i) != descend::f_good_isg(sq(), d.chain, i))
                ++route_disagree;
    }
    c.count_zero(not_good, "descendant not fully f-good");
    c.count_zero(not_good_isg, "descendant not fully f-good (shifted-copy route)");
    c.count_zero(route_disagree, "the two goodness routes disagree");
}

void criterion_gaussian(Check& c) {
    const struct {
        long long a, b, p;
    } pairs[] = {{1, 2, 5},  {2, 3, 13}, {1, 4, 17}, {2, 5, 29}, {1, 6, 37}, {4, 5, 41},
                 {2, 7, 53}, {5, 6, 61}, {3, 8, 73}, {5, 8, 89}, {4, 9, 97}};
    const std::set<long long> one_star = {29, 73, 89, 97};

    for (const auto& [a, b, p] : pairs) {
        std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        c.req(gaussian::is_proper(a, b) && a * a + b * b == p, tag + ": not a proper pair");

        auto gg = gaussian::grid_graph(a, b);
        c.req(static_cast<long long>(gg.isolated.size()) == (b - a) * (b - a),
              tag + ": isolated cell count is not (b-a)^2");

        auto plan = gaussian::clover_plan(a, b);
        int want_k = one_star.count(p) ? 1 : 0;
        c.req(plan.k == want_k, tag + ": plan has " + std::to_string(plan.k) +
                                    " star step(s), expected " + std::to_string(want_k));

        auto clovers = gaussian::clovers_for(a, b);
        c.req(clovers.size() == (1u << plan.k), tag + ": clover count is not 2^k");

        auto mebane = gaussian::mebane_construction(a, b);
        c.req(mebane.size() == 1, tag + ": construction found " + std::to_string(mebane.size()) +
                                      " polyominoes, expected 1");

        std::set<std::vector<Vec2>> cells;
        for (const auto& cl : clovers) {
            c.req(gaussian::is_clover(cl.chain), tag + ": generated chain lacks square symmetry");
            auto cc = gaussian::normalize_cells(gaussian::chain_cells(cl.chain));
            c.req(gaussian::is_z_good(cc, a, b), tag + ": clover is not z-good");
            cells.insert(std::move(cc));
        }
        c.req(cells.size() == clovers.size(), tag + ": clovers coincide");
        c.req(!mebane.empty() && gaussian::is_z_good(mebane[0], a, b),
              tag + ": constructed polyomino is not z-good");
        c.req(!mebane.empty() && cells.count(mebane[0]) == 1,
              tag + ": constructed polyomino is not one of the clovers");
    }

    // The bar-and-cycles clover for p = 29 lives on the lattices of 5+2i and
    // its conjugate, one per tiling, up to sign of the generators.
    for (const auto& cl : gaussian::clovers_for(2, 5)) {
        auto s = descend::s_vectors(cl.chain);
        geom::Lattice odd{s[0], s[2]}, even{s[1], s[3]};
        geom::Lattice zl = gaussian::lattice_of(2, 5), wl = gaussian::conj_lattice_of(2, 5);
        bool direct = gaussian::lattice_equal(odd, zl) && gaussian::lattice_equal(even, wl);
        bool swapped = gaussian::lattice_equal(odd, wl) && gaussian::lattice_equal(even, zl);
        c.req(direct || swapped, "(2,5): clover lattices are not the Gaussian pair");
    }
}

void criterion_determinism(Check& c) {
    auto c1 = tiler::generate_census(sq(), 20);
    auto c2 = tiler::generate_census(sq(), 20);
    bool same = c1.size() == c2.size();
    for (size_t i = 0; same && i < c1.size(); ++i)
        same = c1[i].word == c2[i].word && c1[i].descent == c2[i].descent &&
               c1[i].block == c2[i].block && c1[i].type == c2[i].type &&
               c1[i].sides == c2[i].sides && c1[i].area == c2[i].area;
    c.req(same, "two census runs differ");

    c.req(tiler::oracle_enumerate(16) == tiler::oracle_enumerate(16),
          "two brute-force runs differ");

    std::vector<Word> golden_words;
    {
        std::istringstream in(read_file(golden_path("census20_words.txt")));
        for (Word line; std::getline(in, line);)
            if (!line.empty()) golden_words.push_back(line);
    }
    std::vector<Word> words20;
    for (const auto& e : c1) words20.push_back(e.word);
    c.req(words20 == golden_words, "census words differ from golden list");
    c.req(tiler::oracle_enumerate(20) == golden_words,
          "brute-force words differ from golden list");

    std::string svg = tiler::render_svg(sq(), kCross);
    c.req(svg == tiler::render_svg(sq(), kCross), "two renders of the cross differ");
    c.req(svg == read_file(golden_path("cross.svg")), "cross render differs from golden file");
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<void(Check&)> run;
    };
    const Criterion table[] = {
        {"greek cross ground truth", 1.0, criterion_cross},
        {"transform algebra on descendants", 60.0, criterion_algebra},
        {"descendants stay simple and positive", 60.0, criterion_positive},
        {"generator matches brute-force search", 600.0, criterion_keystone},
        {"decomposition round trip", 60.0, criterion_roundtrip},
        {"rejection machinery", 60.0, criterion_negative},
        {"f-goodness along descents", 120.0, criterion_goodness},
        {"gaussian prime clovers", 60.0, criterion_gaussian},
        {"deterministic output", 120.0, criterion_determinism},
    };

    int failures = 0, index = 0;
    for (const auto& cr : table) {
        ++index;
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.notes.push_back(std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > cr.budget_s)
            check.notes.push_back("over budget: " + std::to_string(elapsed) + "s > " +
                                  std::to_string(cr.budget_s) + "s");

        bool ok = check.notes.empty();
        failures += ok ? 0 : 1;
        std::printf("%s %d %-40s %7.2fs\n", ok ? "PASS" : "FAIL", index, cr.name, elapsed);
        for (const auto& note : check.notes) std::printf("       - %s\n", note.c_str());
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}
