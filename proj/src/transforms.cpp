#include "dtile/transforms.hpp"

#include <algorithm>

namespace dtile::transforms {

using chains::TypeQuad;
using chains::type_of;
using words::cyclic_shift;
using words::ImaginaryWord;
using words::reverse;

const char* tag_name(Tag t) {
    switch (t) {
    case Tag::F1: return "f1";
    case Tag::F2: return "f2";
    case Tag::F3: return "f3";
    case Tag::F4: return "f4";
    case Tag::FOdd: return "fO";
    case Tag::FEven: return "fE";
    case Tag::GOdd: return "gO";
    case Tag::GEven: return "gE";
    case Tag::GStarOdd: return "g*O";
    case Tag::GStarEven: return "g*E";
    }
    return "?";
}

std::optional<Tag> parse_tag(std::string_view name) {
    for (Tag t : {Tag::F1, Tag::F2, Tag::F3, Tag::F4, Tag::FOdd, Tag::FEven, Tag::GOdd,
                  Tag::GEven, Tag::GStarOdd, Tag::GStarEven})
        if (name == tag_name(t)) return t;
    return std::nullopt;
}

WordChain f_lift(const Alphabet& ab, const WordChain& c, int i) {
    if (i < 1 || i > 4) fail(Errc::BadInput, "f index must be 1..4");
    WordChain v;
    for (int j = 1; j <= 8; ++j)
        v.part(j) = (j % 4 == i % 4) ? reverse(ab, chains::slice(c, j + 3, j + 5)) : c.part(j);
    return v;
}

bool f_reduction_admissible(const Alphabet& ab, const WordChain& c, int i) {
    if (i < 1 || i > 4) fail(Errc::BadInput, "f index must be 1..4");
    TypeQuad b = type_of(ab, c);
    return b[i] >= b[i - 1] + b[i + 1];
}

bool f_reduction_is_false(const Alphabet& ab, const WordChain& c, int i) {
    if (i < 1 || i > 4) fail(Errc::BadInput, "f index must be 1..4");
    TypeQuad b = type_of(ab, c);
    return b[i - 1] == 0 && b[i + 1] == 0;
}

WordChain f_reduce(const Alphabet& ab, const WordChain& c, int i) {
    if (!f_reduction_admissible(ab, c, i))
        fail(Errc::NotApplicable, "f reduction needs b_i >= b_{i-1} + b_{i+1}");
    Word middles[2];
    for (int k = 0; k < 2; ++k) {
        int j = i + 4 * k;
        const Word& vj = c.part(j);
        Word pre = reverse(ab, c.part(j + 5));
        Word suf = reverse(ab, c.part(j + 3));
        if (vj.size() < pre.size() + suf.size() ||
            Word(vj.substr(0, pre.size())) != pre ||
            Word(vj.substr(vj.size() - suf.size())) != suf)
            fail(Errc::Internal, "chain is not in the image of the f lift");
        middles[k] = vj.substr(pre.size(), vj.size() - pre.size() - suf.size());
    }
    WordChain out = c;
    out.part(i) = reverse(ab, middles[1]);
    out.part(i + 4) = reverse(ab, middles[0]);
    return out;
}

bool g_admissible(const Alphabet& ab, const WordChain& c, Parity p) {
    TypeQuad b = type_of(ab, c);
    int i = p == Parity::Odd ? 1 : 2;
    return b[i] <= b[i - 1] + b[i + 1] && b[i + 2] <= b[i + 1] + b[i + 3];
}

WordChain g_transform(const Alphabet& ab, const WordChain& c, Parity p) {
    if (!g_admissible(ab, c, p))
        fail(Errc::NotApplicable, "g transform needs b_i <= b_{i-1} + b_{i+1} on its parity");
    WordChain out;
    for (int j = 1; j <= 8; ++j) {
        bool active = (j % 2 == 1) == (p == Parity::Odd);
        if (!active) {
            out.part(j) = reverse(ab, c.part(j));
            continue;
        }
        ImaginaryWord iw = ImaginaryWord::from_word(c.part(j + 5));
        iw = iconcat(iw, inegate(ImaginaryWord::from_word(reverse(ab, c.part(j)))));
        iw = iconcat(iw, ImaginaryWord::from_word(c.part(j + 3)));
        std::optional<Word> w = to_ordinary(iw);
        if (!w) fail(Errc::InternalNonPositive, "g transform left negated letters in a part");
        out.part(j) = *w;
    }
    return out;
}

WordChain gstar_lift(const Alphabet& ab, const WordChain& c, Parity p) {
    WordChain v;
    for (int j = 1; j <= 8; ++j) {
        bool starred = (j % 2 == 1) == (p == Parity::Odd);
        v.part(j) = starred ? reverse(ab, chains::slice(c, j - 2, j + 2))
                            : chains::slice(c, j + 3, j + 5);
    }
    return v;
}

WordChain root_chain(const Alphabet& ab, const Word& x, const Word& y) {
    WordChain c;
    c.part(1) = x;
    c.part(3) = y;
    c.part(5) = reverse(ab, x);
    c.part(7) = reverse(ab, y);
    return c;
}

WordChain substituted_cross(const Alphabet& ab, const Word& x, const Word& y) {
    return f_lift(ab, f_lift(ab, root_chain(ab, x, y), 2), 4);
}

ReductionOutcome reduce_to_base(const Alphabet& ab, WordChain c) {
    if (!chains::is_interleaved_double_chain(ab, c))
        fail(Errc::NotDoubleChain, "reduction runs on the interleaved system");
    ReductionOutcome out;
    for (;;) {
        TypeQuad t = type_of(ab, c);
        if (t[2] + t[4] == 0) {
            out.root = RootBase{c.part(1), c.part(3), true};
            out.base = c;
            return out;
        }
        if (t[1] + t[3] == 0) {
            out.root = RootBase{c.part(2), c.part(4), false};
            out.base = c;
            return out;
        }
        if (t[1] + t[3] == t[2] + t[4] && t[1] > 0 && t[2] > 0 && t[3] > 0 && t[4] > 0) {
            out.base = c; // genuine loop
            return out;
        }
        auto adm = [&](int i) { return f_reduction_admissible(ab, c, i); };
        if (adm(1) && adm(3)) {
            c = f_reduce(ab, f_reduce(ab, c, 1), 3);
            out.reductions.push_back(Tag::FOdd);
        } else if (adm(2) && adm(4)) {
            c = f_reduce(ab, f_reduce(ab, c, 2), 4);
            out.reductions.push_back(Tag::FEven);
        } else if (adm(1) || adm(2) || adm(3) || adm(4)) {
            int i = adm(1) ? 1 : adm(2) ? 2 : adm(3) ? 3 : 4;
            c = f_reduce(ab, c, i);
            out.reductions.push_back(i == 1 ? Tag::F1 : i == 2 ? Tag::F2 : i == 3 ? Tag::F3 : Tag::F4);
        } else if (t[1] + t[3] > t[2] + t[4]) {
            c = g_transform(ab, c, Parity::Odd);
            out.reductions.push_back(Tag::GOdd);
        } else if (t[2] + t[4] > t[1] + t[3]) {
            c = g_transform(ab, c, Parity::Even);
            out.reductions.push_back(Tag::GEven);
        } else {
            fail(Errc::Internal, "no reduction applies at a non-loop chain");
        }
    }
}

std::vector<Tag> repackage_descent(const std::vector<Tag>& lifts) {
    std::vector<Tag> out;
    for (size_t k = 0; k < lifts.size(); ++k) {
        switch (lifts[k]) {
        case Tag::F1:
        case Tag::F2:
        case Tag::F3:
        case Tag::F4:
        case Tag::GStarOdd:
        case Tag::GStarEven:
            out.push_back(lifts[k]);
            break;
        case Tag::FEven:
            if (k + 1 < lifts.size() && lifts[k + 1] == Tag::GOdd) {
                out.push_back(Tag::GStarOdd);
                ++k;
            } else {
                out.push_back(Tag::F2);
                out.push_back(Tag::F4);
            }
            break;
        case Tag::FOdd:
            if (k + 1 < lifts.size() && lifts[k + 1] == Tag::GEven) {
                out.push_back(Tag::GStarEven);
                ++k;
            } else {
                out.push_back(Tag::F1);
                out.push_back(Tag::F3);
            }
            break;
        case Tag::GOdd:
        case Tag::GEven:
            fail(Errc::IrregularG, "g lift without its f pair");
        }
    }
    return out;
}

WordChain apply_descent(const Alphabet& ab, WordChain base, const std::vector<Tag>& lifts) {
    for (Tag t : lifts) {
        switch (t) {
        case Tag::F1: base = f_lift(ab, base, 1); break;
        case Tag::F2: base = f_lift(ab, base, 2); break;
        case Tag::F3: base = f_lift(ab, base, 3); break;
        case Tag::F4: base = f_lift(ab, base, 4); break;
        case Tag::FOdd: base = f_lift(ab, f_lift(ab, base, 1), 3); break;
        case Tag::FEven: base = f_lift(ab, f_lift(ab, base, 2), 4); break;
        case Tag::GOdd: base = g_transform(ab, base, Parity::Odd); break;
        case Tag::GEven: base = g_transform(ab, base, Parity::Even); break;
        case Tag::GStarOdd: base = gstar_lift(ab, base, Parity::Odd); break;
        case Tag::GStarEven: base = gstar_lift(ab, base, Parity::Even); break;
        }
    }
    return base;
}

Tag conjugate_tag(Tag t) {
    switch (t) {
    case Tag::F1: return Tag::F2;
    case Tag::F2: return Tag::F3;
    case Tag::F3: return Tag::F4;
    case Tag::F4: return Tag::F1;
    case Tag::FOdd: return Tag::FEven;
    case Tag::FEven: return Tag::FOdd;
    case Tag::GOdd: return Tag::GEven;
    case Tag::GEven: return Tag::GOdd;
    case Tag::GStarOdd: return Tag::GStarEven;
    case Tag::GStarEven: return Tag::GStarOdd;
    }
    fail(Errc::Internal, "bad tag");
}

const char* reject_name(RejectReason r) {
    switch (r) {
    case RejectReason::NoFactorization: return "NoFactorization";
    case RejectReason::SingleTiling: return "SingleTiling";
    case RejectReason::NonInterleavedOnly: return "NonInterleavedOnly";
    case RejectReason::SelfIntersectionImplied: return "SelfIntersectionImplied";
    }
    return "?";
}

namespace {

// Remove one F2 and one F4 (or F1/F3) from the leading run of the packed
// descent; empty result means the run lacks one of them.
std::optional<std::vector<Tag>> strip_leading_pair(const std::vector<Tag>& packed, Tag fa, Tag fb) {
    size_t run = 0;
    while (run < packed.size() && (packed[run] == fa || packed[run] == fb)) ++run;
    size_t pa = run, pb = run;
    for (size_t k = 0; k < run; ++k) {
        if (pa == run && packed[k] == fa) pa = k;
        if (pb == run && packed[k] == fb) pb = k;
    }
    if (pa == run || pb == run) return std::nullopt;
    std::vector<Tag> rest;
    for (size_t k = 0; k < packed.size(); ++k)
        if (k != pa && k != pb) rest.push_back(packed[k]);
    return rest;
}

} // namespace

DecomposeResult decompose(std::string_view w) {
    const Alphabet& ab = Alphabet::square();
    DecomposeResult res;

    auto fs = chains::theta_tile_factorizations(w);
    if (fs.empty()) {
        res.reject = RejectReason::NoFactorization;
        return res;
    }
    if (fs.size() == 1) {
        res.reject = RejectReason::SingleTiling;
        return res;
    }

    std::optional<chains::BuiltChain> built;
    bool saw_non_interleaved = false;
    for (size_t i = 0; i < fs.size() && !built; ++i) {
        for (size_t j = i + 1; j < fs.size() && !built; ++j) {
            try {
                chains::BuiltChain b = chains::build_double_chain(w, fs[i], fs[j]);
                if (b.kind == chains::ChainKind::Interleaved) built = std::move(b);
                else saw_non_interleaved = true;
            } catch (const Error& e) {
                if (e.code() != Errc::PatternMismatch) throw;
            }
        }
    }
    if (!built) {
        if (!saw_non_interleaved) fail(Errc::Internal, "factorization pair fits no pattern");
        res.reject = RejectReason::NonInterleavedOnly;
        return res;
    }

    ReductionOutcome red = reduce_to_base(ab, built->chain);
    if (red.hit_loop()) {
        res.reject = RejectReason::SelfIntersectionImplied;
        return res;
    }

    std::vector<Tag> lifts(red.reductions.rbegin(), red.reductions.rend());
    std::vector<Tag> packed = repackage_descent(lifts);

    Word x, y;
    std::vector<Tag> descent;
    if (red.root->odd_positions) {
        auto rest = strip_leading_pair(packed, Tag::F2, Tag::F4);
        if (!rest) {
            res.reject = RejectReason::SelfIntersectionImplied;
            return res;
        }
        x = red.root->x;
        y = red.root->y;
        descent = std::move(*rest);
    } else {
        auto rest = strip_leading_pair(packed, Tag::F1, Tag::F3);
        if (!rest) {
            res.reject = RejectReason::SelfIntersectionImplied;
            return res;
        }
        // Rebase the shifted root: the chain starting one part later descends
        // from root(y^-1, x) with every lift index moved up by one.
        x = reverse(ab, red.root->y);
        y = red.root->x;
        descent = std::move(*rest);
        for (Tag& t : descent) t = conjugate_tag(t);
    }

    WordChain recon = apply_descent(ab, substituted_cross(ab, x, y), descent);
    Word rw = recon.concat();
    if (rw.size() != w.size()) fail(Errc::Internal, "certificate length mismatch");
    long long shift = -1;
    for (size_t s = 0; s < w.size(); ++s) {
        if (cyclic_shift(w, static_cast<long long>(s)) == rw) {
            shift = static_cast<long long>(s);
            break;
        }
    }
    if (shift < 0) fail(Errc::Internal, "certificate does not reproduce the word");
    res.certificate = DoubleTileCertificate{x, y, descent, shift};
    return res;
}

} // namespace dtile::transforms
