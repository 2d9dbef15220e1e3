#include "doctest.h"

#include <random>

#include "dtile/words.hpp"

using namespace dtile;
using namespace dtile::words;

namespace {

Word random_word(std::mt19937& rng, const std::string& letters, int len) {
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    Word w;
    for (int i = 0; i < len; ++i) w += letters[pick(rng)];
    return w;
}

} // namespace

TEST_CASE("square alphabet pairs R/L and U/D") {
    const Alphabet& ab = Alphabet::square();
    CHECK(ab.reverse_letter('R') == 'L');
    CHECK(ab.reverse_letter('L') == 'R');
    CHECK(ab.reverse_letter('U') == 'D');
    CHECK(ab.reverse_letter('D') == 'U');
    CHECK(ab.contains('R'));
    CHECK_FALSE(ab.contains('A'));
    CHECK(ab.representatives() == "RU");
    CHECK_THROWS_AS(ab.check_word("RUX"), Error);
}

TEST_CASE("abc alphabet pairs upper/lower") {
    const Alphabet& ab = Alphabet::abc();
    CHECK(ab.reverse_letter('A') == 'a');
    CHECK(ab.reverse_letter('b') == 'B');
    CHECK(ab.contains('C'));
    CHECK_FALSE(ab.contains('R'));
}

TEST_CASE("reversal flips letters and order") {
    const Alphabet& ab = Alphabet::square();
    CHECK(reverse(ab, "") == "");
    CHECK(reverse(ab, "R") == "L");
    CHECK(reverse(ab, "RU") == "DL");
    CHECK(reverse(ab, "RUR") == "LDL");
    CHECK(reverse(ab, "DR") == "LU");

    std::mt19937 rng(12345);
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(rng, ab.letters(), t % 17);
        CHECK(reverse(ab, reverse(ab, w)) == w);
    }
}

TEST_CASE("balance counts letters against their reverses") {
    const Alphabet& ab = Alphabet::square();
    CHECK(is_balanced(ab, ""));
    CHECK(is_balanced(ab, "RL"));
    CHECK(is_balanced(ab, "RULD"));
    CHECK_FALSE(is_balanced(ab, "RU"));
    CHECK_FALSE(is_balanced(ab, "RRL"));

    // W W^-1 is always balanced.
    std::mt19937 rng(777);
    for (int t = 0; t < 100; ++t) {
        Word w = random_word(rng, ab.letters(), 1 + t % 9);
        CHECK(is_balanced(ab, w + reverse(ab, w)));
    }
}

TEST_CASE("cyclic shift moves a prefix to the end") {
    CHECK(cyclic_shift("RULD", 0) == "RULD");
    CHECK(cyclic_shift("RULD", 1) == "ULDR");
    CHECK(cyclic_shift("RULD", 3) == "DRUL");
    CHECK(cyclic_shift("RULD", 4) == "RULD");
    CHECK(cyclic_shift("RULD", 5) == "ULDR");
    CHECK(cyclic_shift("RULD", -1) == "DRUL");
    CHECK(cyclic_shift("", 3) == "");
}

TEST_CASE("combinatorial self-intersections are balanced proper subwords") {
    const Alphabet& ab = Alphabet::square();
    using Hits = std::vector<std::pair<int, int>>;

    // The plus-shaped 5-cell cross is simple: no hits.
    CHECK(combinatorial_self_intersections(ab, "RURULULDLDRD") == Hits{});
    CHECK_FALSE(has_combinatorial_self_intersection(ab, "RURULULDLDRD"));
    CHECK_FALSE(has_combinatorial_self_intersection(ab, "RRULLD"));

    // w w^-1 for a single letter: the whole word is the intersection.
    CHECK(combinatorial_self_intersections(ab, "RL") == Hits{{0, 2}});
    CHECK(has_combinatorial_self_intersection(ab, "RL"));

    // Doubling back in the middle.
    CHECK(combinatorial_self_intersections(ab, "RRLL") == Hits{{1, 2}});

    Hits h = combinatorial_self_intersections(ab, "RLRL");
    CHECK(h == Hits{{0, 2}, {1, 2}, {2, 2}});
}

TEST_CASE("substitutions respect reversal") {
    const Alphabet& sq = Alphabet::square();
    Substitution zeta(sq, sq);
    zeta.map('R', "RUR");
    zeta.map('U', "ULU");

    CHECK(zeta.apply("R") == "RUR");
    CHECK(zeta.apply("L") == "LDL");
    CHECK(zeta.apply("RL") == "RURLDL");

    std::mt19937 rng(999);
    for (int t = 0; t < 100; ++t) {
        Word w;
        std::uniform_int_distribution<int> pick(0, 3);
        for (int i = 0; i < t % 13; ++i) w += "RLUD"[pick(rng)];
        CHECK(zeta.apply(reverse(sq, w)) == reverse(sq, zeta.apply(w)));
    }

    // abc -> square instance used by the loop template.
    const Alphabet& abc = Alphabet::abc();
    Substitution inst(abc, sq);
    inst.map('A', "R");
    inst.map('B', "U");
    inst.map('C', "R");
    CHECK(inst.apply("ABCba") == "RURDL");
}

TEST_CASE("imaginary words reduce only letter-against-negation") {
    const Alphabet& ab = Alphabet::square();

    // R R^-1 = RL keeps both entries: reversal is not group inverse.
    ImaginaryWord rl = ImaginaryWord::from_word("RL");
    CHECK(rl.entries().size() == 2);
    CHECK(ilength(rl) == 2);
    CHECK(classify(rl) == IClass::Positive);
    CHECK(to_ordinary(rl) == Word("RL"));

    // R followed by negated R vanishes.
    ImaginaryWord r = ImaginaryWord::from_word("R");
    ImaginaryWord cancel = iconcat(r, inegate(r));
    CHECK(cancel.empty());
    CHECK(classify(cancel) == IClass::Empty);

    ImaginaryWord neg = inegate(ImaginaryWord::from_word("RU"));
    CHECK(ilength(neg) == -2);
    CHECK(classify(neg) == IClass::Negative);
    CHECK_FALSE(to_ordinary(neg).has_value());
    CHECK(classify(iconcat(rl, neg)) == IClass::Mixed);

    // ireverse is reversal (letters flip, signs stay); inegate flips signs.
    ImaginaryWord ir = ireverse(ab, r);
    REQUIRE(ir.entries().size() == 1);
    CHECK(ir.entries()[0] == IEntry{'L', false});
    ImaginaryWord in = inegate(r);
    REQUIRE(in.entries().size() == 1);
    CHECK(in.entries()[0] == IEntry{'R', true});

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int t = 0; t < 200; ++t) {
        ImaginaryWord w;
        for (int i = 0; i < t % 11; ++i) w.push({"RLUD"[pick(rng)], sign(rng) == 1});
        CHECK(iconcat(w, inegate(w)).empty());
        CHECK(ireverse(ab, inegate(w)) == inegate(ireverse(ab, w)));
        CHECK(ireverse(ab, ireverse(ab, w)) == w);
        CHECK(ilength(inegate(w)) == -ilength(w));
    }
}

TEST_CASE("ordinary round trip through imaginary words") {
    std::mt19937 rng(31337);
    const Alphabet& ab = Alphabet::square();
    std::uniform_int_distribution<int> pick(0, 3);
    for (int t = 0; t < 100; ++t) {
        Word w;
        for (int i = 0; i < t % 15; ++i) w += "RLUD"[pick(rng)];
        ImaginaryWord iw = ImaginaryWord::from_word(w);
        CHECK(to_ordinary(iw) == w);
        std::optional<Word> rev = to_ordinary(ireverse(ab, iw));
        CHECK(rev == reverse(ab, w));
    }
}
