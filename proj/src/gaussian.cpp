#include "dtile/gaussian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "dtile/error.hpp"
#include "dtile/tiler.hpp"
#include "dtile/transforms.hpp"

namespace dtile::gaussian {

namespace {

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

const words::Alphabet& sq() {
    static const words::Alphabet ab = words::Alphabet::square();
    return ab;
}

} // namespace

bool is_proper(long long a, long long b) {
    return a > 0 && b > 0 && is_odd_prime(a * a + b * b);
}

ProperGaussianPrime proper(long long a, long long b) {
    if (!is_proper(a, b)) fail(Errc::BadPair, "a^2 + b^2 must be an odd prime with a, b > 0");
    auto [lo, hi] = std::minmax(a, b);
    return {lo, hi, a * a + b * b};
}

geom::Lattice lattice_of(long long a, long long b) {
    return {{a, b}, {-b, a}};
}

geom::Lattice conj_lattice_of(long long a, long long b) {
    return {{b, a}, {-a, b}};
}

bool lattice_equal(const geom::Lattice& l1, const geom::Lattice& l2) {
    long long d1 = l1.det(), d2 = l2.det();
    if (d1 == 0 || d2 == 0 || std::abs(d1) != std::abs(d2)) return false;
    return l2.contains(l1.g1) && l2.contains(l1.g2);
}

bool is_z_good(const std::vector<Vec2>& cells, long long a, long long b) {
    long long p = a * a + b * b;
    std::vector<Vec2> cs = cells;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if ((long long)cs.size() != p) fail(Errc::WrongArea, "cell count must equal a^2 + b^2");

    geom::Lattice lz = lattice_of(a, b), lzc = conj_lattice_of(a, b);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            Vec2 d = cs[j] - cs[i];
            if (lz.contains(d) || lzc.contains(d)) return false;
        }
    return true;
}

GridGraph grid_graph(long long a, long long b) {
    if (!(0 < a && a < b)) fail(Errc::BadPair, "grid graph wants 0 < a < b");
    long long n = a + b;
    auto in_grid = [n](Vec2 v) { return 0 <= v.x && v.x < n && 0 <= v.y && v.y < n; };
    auto neighbours = [&](Vec2 v) {
        std::vector<Vec2> out;
        const Vec2 disp[8] = {{a, b},  {a, -b},  {-a, b},  {-a, -b},
                              {b, a},  {b, -a},  {-b, a},  {-b, -a}};
        for (Vec2 d : disp)
            if (in_grid(v + d)) out.push_back(v + d);
        std::sort(out.begin(), out.end());
        return out;
    };

    GridGraph g;
    g.side = n;
    std::set<Vec2> seen;
    for (long long y = 0; y < n; ++y)
        for (long long x = 0; x < n; ++x) {
            Vec2 v{x, y};
            if (seen.count(v)) continue;
            auto nb = neighbours(v);
            if (nb.empty()) {
                g.isolated.push_back(v);
                seen.insert(v);
                continue;
            }
            if (nb.size() != 2) fail(Errc::Internal, "grid graph cell degree is not 0 or 2");
            // Walk the cycle from its smallest cell (cells are scanned in
            // increasing order, so v is smallest in its cycle).
            std::vector<Vec2> cycle{v};
            seen.insert(v);
            Vec2 prev = v, cur = nb[0];
            while (cur != v) {
                cycle.push_back(cur);
                seen.insert(cur);
                auto cnb = neighbours(cur);
                if (cnb.size() != 2) fail(Errc::Internal, "grid graph cell degree is not 0 or 2");
                Vec2 next = (cnb[0] == prev) ? cnb[1] : cnb[0];
                prev = cur;
                cur = next;
            }
            if (cycle.size() % 2 != 0) fail(Errc::Internal, "grid graph cycle of odd length");
            g.cycles.push_back(std::move(cycle));
        }
    return g;
}

namespace {

bool cells_connected(const std::vector<Vec2>& cells) {
    if (cells.empty()) return true;
    std::set<Vec2> todo(cells.begin(), cells.end());
    std::vector<Vec2> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        Vec2 v = stack.back();
        stack.pop_back();
        const Vec2 side[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (Vec2 d : side) {
            auto it = todo.find(v + d);
            if (it != todo.end()) {
                stack.push_back(*it);
                todo.erase(it);
            }
        }
    }
    return todo.empty();
}

} // namespace

std::vector<std::vector<Vec2>> mebane_construction(long long a, long long b) {
    auto [lo, hi] = std::minmax(a, b);
    GridGraph g = grid_graph(lo, hi);

    std::vector<std::vector<Vec2>> results;
    std::size_t ncyc = g.cycles.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << ncyc); ++mask) {
        std::vector<Vec2> cells = g.isolated;
        for (std::size_t j = 0; j < ncyc; ++j) {
            std::size_t start = (mask >> j) & 1;
            for (std::size_t t = start; t < g.cycles[j].size(); t += 2)
                cells.push_back(g.cycles[j][t]);
        }
        if (!cells_connected(cells)) continue;
        if (!is_z_good(cells, lo, hi))
            fail(Errc::Internal, "connected half-selection failed the goodness check");
        results.push_back(normalize_cells(std::move(cells)));
    }
    std::sort(results.begin(), results.end());
    return results;
}

const char* plan_step_name(PlanStep s) {
    switch (s) {
    case PlanStep::FOdd: return "fOdd";
    case PlanStep::FEven: return "fEven";
    case PlanStep::GStar: return "g*";
    }
    fail(Errc::Internal, "bad plan step");
}

CloverPlan clover_plan(long long a, long long b) {
    if (!(0 < a && a < b) || (a + b) % 2 == 0 || std::gcd(a, b) != 1)
        fail(Errc::BadPair, "clover plan wants 0 < a < b, a + b odd, gcd(a, b) = 1");

    CloverPlan plan;
    while (!(a == 1 && b == 2)) {
        if (3 * a < b) {
            plan.steps.push_back(PlanStep::FOdd);
            b = b - 2 * a;
        } else if (b < 2 * a) {
            plan.steps.push_back(PlanStep::FEven);
            long long c = 2 * a - b;
            b = a;
            a = c;
        } else if (2 * a < b && b < 3 * a) {
            plan.steps.push_back(PlanStep::GStar);
            long long c = b - 2 * a;
            b = a;
            a = c;
            ++plan.k;
        } else {
            // b = 2a or b = 3a cannot happen: gcd 1 forces a = 1 and then
            // (1, 2) is the loop exit while (1, 3) has even sum.
            fail(Errc::Internal, "pair recurrence is stuck");
        }
        if (!(0 < a && a < b) || (a + b) % 2 == 0 || std::gcd(a, b) != 1)
            fail(Errc::Internal, "pair recurrence left the valid region");
    }
    // Steps were collected walking down from (a, b); flip them into
    // application order from the Greek cross.
    std::reverse(plan.steps.begin(), plan.steps.end());
    return plan;
}

std::vector<descend::Descendant> clovers_for(long long a, long long b) {
    auto [lo, hi] = std::minmax(a, b);
    CloverPlan plan = clover_plan(lo, hi);

    std::vector<descend::Descendant> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << plan.k); ++mask) {
        std::vector<transforms::Tag> descent;
        std::size_t slot = 0;
        for (PlanStep s : plan.steps) {
            switch (s) {
            case PlanStep::FOdd: descent.push_back(transforms::Tag::FOdd); break;
            case PlanStep::FEven: descent.push_back(transforms::Tag::FEven); break;
            case PlanStep::GStar:
                descent.push_back(((mask >> slot++) & 1) ? transforms::Tag::GStarEven
                                                         : transforms::Tag::GStarOdd);
                break;
            }
        }
        WordChain chain = transforms::apply_descent(sq(), descend::greek_cross(), descent);
        out.push_back({std::move(chain), std::move(descent)});
    }
    return out;
}

namespace {

char rot90(char c) {
    switch (c) {
    case 'R': return 'U';
    case 'U': return 'L';
    case 'L': return 'D';
    case 'D': return 'R';
    }
    fail(Errc::BadInput, "not a grid letter");
}

char mirror_x(char c) {
    switch (c) {
    case 'U': return 'D';
    case 'D': return 'U';
    default: return c;
    }
}

} // namespace

bool has_square_symmetry(std::string_view w) {
    words::Word canon = tiler::canonical_boundary_word(sq(), w);
    // The eight isometries of the square: rot^k and rot^k after the mirror.
    for (int mir = 0; mir < 2; ++mir) {
        words::Word img(w);
        if (mir)
            for (char& ch : img) ch = mirror_x(ch);
        for (int k = 0; k < 4; ++k) {
            if (mir || k) // skip the identity
                if (tiler::canonical_boundary_word(sq(), img) != canon) return false;
            for (char& ch : img) ch = rot90(ch);
        }
    }
    return true;
}

bool is_clover(const WordChain& c) {
    return has_square_symmetry(c.concat());
}

std::vector<Vec2> chain_cells(const WordChain& c) {
    return normalize_cells(geom::enclosed_cells(c.concat()));
}

std::vector<Vec2> normalize_cells(std::vector<Vec2> cells) {
    if (cells.empty()) return cells;
    Vec2 lo = cells[0];
    for (Vec2 v : cells) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
    }
    for (Vec2& v : cells) v = v - lo;
    std::sort(cells.begin(), cells.end());
    return cells;
}

} // namespace dtile::gaussian
