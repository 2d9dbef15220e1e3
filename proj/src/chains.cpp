#include "dtile/chains.hpp"

#include <algorithm>
#include <set>

#include "dtile/geom.hpp"

namespace dtile::chains {

using words::reverse;

Word WordChain::concat() const {
    Word out;
    out.reserve(total_length());
    for (const Word& p : parts) out += p;
    return out;
}

size_t WordChain::total_length() const {
    size_t n = 0;
    for (const Word& p : parts) n += p.size();
    return n;
}

WordChain WordChain::shifted(long long k) const {
    WordChain out;
    for (long long i = 1; i <= 8; ++i) out.part(i) = part(i + k);
    return out;
}

WordChain parse_chain(const Alphabet& ab, std::string_view text) {
    WordChain c;
    size_t pos = 0;
    for (int i = 0; i < 8; ++i) {
        size_t colon = text.find(':', pos);
        bool last = (i == 7);
        if (last != (colon == std::string_view::npos))
            fail(Errc::BadInput, "chain text must have exactly 8 ':'-separated parts");
        std::string_view piece = text.substr(pos, last ? std::string_view::npos : colon - pos);
        if (piece == "-") piece = "";
        ab.check_word(piece);
        c.parts[static_cast<size_t>(i)] = Word(piece);
        pos = colon + 1;
    }
    return c;
}

std::string format_chain(const WordChain& c) {
    std::string out;
    for (int i = 0; i < 8; ++i) {
        if (i) out += ':';
        out += c.parts[static_cast<size_t>(i)].empty() ? "-" : c.parts[static_cast<size_t>(i)];
    }
    return out;
}

bool is_interleaved_double_chain(const Alphabet& ab, const WordChain& c) {
    for (long long i = 1; i <= 4; ++i)
        if (c.part(i) + c.part(i + 1) != reverse(ab, c.part(i + 4) + c.part(i + 5))) return false;
    return true;
}

bool is_non_interleaved_double_chain(const Alphabet& ab, const WordChain& c) {
    for (long long i : {1, 3}) {
        if (c.part(i) != reverse(ab, c.part(i + 4))) return false;
        if (c.part(i - 1) + c.part(i) + c.part(i + 1) !=
            reverse(ab, c.part(i + 3) + c.part(i + 4) + c.part(i + 5)))
            return false;
    }
    return true;
}

TypeQuad type_of(const Alphabet& ab, const WordChain& c) {
    if (!is_interleaved_double_chain(ab, c) && !is_non_interleaved_double_chain(ab, c))
        fail(Errc::NotDoubleChain, "chain satisfies neither (I) nor (NI)");
    for (long long i = 1; i <= 4; ++i)
        if (c.part(i).size() != c.part(i + 4).size())
            fail(Errc::Internal, "double chain with mismatched part lengths");
    return TypeQuad{{static_cast<long long>(c.part(1).size()), static_cast<long long>(c.part(2).size()),
                     static_cast<long long>(c.part(3).size()), static_cast<long long>(c.part(4).size())}};
}

Word slice(const WordChain& c, long long i, long long j) {
    if (i > j) {
        if (1 <= j && j < i && i <= 8) j += 8;
        else fail(Errc::IndexConvention, "slice wants i <= j or 1 <= j < i <= 8");
    }
    Word out;
    for (long long k = i; k <= j; ++k) out += c.part(k);
    return out;
}

std::vector<TileFactorization> theta_tile_factorizations(std::string_view w) {
    if (geom::span(w) != geom::Vec2{0, 0}) fail(Errc::NotClosed, "factorization needs a closed word");
    const int n = static_cast<int>(w.size());
    std::vector<TileFactorization> out;
    if (n == 0 || n % 2 != 0) return out;
    const int m = n / 2;
    const auto& ab = Alphabet::square();
    auto at = [&](int k) { return w[static_cast<size_t>(((k % n) + n) % n)]; };

    std::set<std::array<int, 4>> seen;
    for (int o = 0; o < n; ++o) {
        for (int la = 0; la <= m; ++la) {
            // W^<o> = A B A^-1 B^-1 with |A| = la: check the two mirrored halves.
            bool ok = true;
            for (int k = 0; ok && k < la; ++k)
                if (at(o + m + k) != ab.reverse_letter(at(o + la - 1 - k))) ok = false;
            for (int k = 0; ok && k < m - la; ++k)
                if (at(o + m + la + k) != ab.reverse_letter(at(o + m - 1 - k))) ok = false;
            if (!ok) continue;
            std::array<int, 4> pts = {o % n, (o + la) % n, (o + m) % n, (o + la + m) % n};
            std::sort(pts.begin(), pts.end());
            if (!seen.insert(pts).second) continue;
            out.push_back(TileFactorization{o, la, pts});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Word cyclic_arc(std::string_view w, int from, int to) {
    const int n = static_cast<int>(w.size());
    int len = ((to - from) % n + n) % n;
    Word out;
    out.reserve(static_cast<size_t>(len));
    for (int k = 0; k < len; ++k) out.push_back(w[static_cast<size_t>((from + k) % n)]);
    return out;
}

bool labels_alternate(const std::array<int, 8>& lab, int r) {
    for (int k = 0; k < 8; ++k)
        if (lab[static_cast<size_t>((r + k) % 8)] == lab[static_cast<size_t>((r + k + 1) % 8)]) return false;
    return true;
}

bool labels_pair_up(const std::array<int, 8>& lab, int r) {
    for (int k = 0; k < 8; k += 2) {
        int a = lab[static_cast<size_t>((r + k) % 8)];
        int b = lab[static_cast<size_t>((r + k + 1) % 8)];
        int c = lab[static_cast<size_t>((r + k + 2) % 8)];
        if (a != b || b == c) return false;
    }
    return true;
}

} // namespace

BuiltChain build_double_chain(std::string_view w, const TileFactorization& q1,
                              const TileFactorization& q2) {
    if (q1.points == q2.points) fail(Errc::BadInput, "need two distinct factorizations");
    const auto& ab = Alphabet::square();

    struct Entry {
        int pos;
        int label; // 0 = q1, 1 = q2
    };
    std::vector<Entry> entries;
    for (int p : q1.points) entries.push_back({p, 0});
    for (int p : q2.points) entries.push_back({p, 1});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.pos < b.pos; });

    // Coinciding division points make the linear order ambiguous; try every
    // ordering within each tie group (groups are tiny).
    std::vector<std::pair<int, int>> groups; // [begin, end)
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        while (j < entries.size() && entries[j].pos == entries[i].pos) ++j;
        if (j - i > 1) groups.emplace_back(static_cast<int>(i), static_cast<int>(j));
        i = j;
    }

    std::optional<BuiltChain> best;
    auto try_order = [&](const std::vector<Entry>& order) {
        if (best) return;
        std::array<int, 8> lab{};
        std::array<int, 8> pos{};
        for (int k = 0; k < 8; ++k) {
            lab[static_cast<size_t>(k)] = order[static_cast<size_t>(k)].label;
            pos[static_cast<size_t>(k)] = order[static_cast<size_t>(k)].pos;
        }
        for (int r = 0; r < 8 && !best; ++r) {
            bool inter = labels_alternate(lab, r);
            bool pairs = labels_pair_up(lab, r);
            if (!inter && !pairs) continue;
            WordChain c;
            for (int k = 0; k < 8; ++k)
                c.part(k + 1) = cyclic_arc(w, pos[static_cast<size_t>((r + k) % 8)],
                                           pos[static_cast<size_t>((r + k + 1) % 8)]);
            if (inter && is_interleaved_double_chain(ab, c)) {
                best = BuiltChain{c, ChainKind::Interleaved, pos[static_cast<size_t>(r)]};
            } else if (pairs && is_non_interleaved_double_chain(ab, c)) {
                best = BuiltChain{c, ChainKind::NonInterleaved, pos[static_cast<size_t>(r)]};
            }
        }
    };

    // Depth-first over tie-group permutations, deterministic order.
    std::vector<Entry> order = entries;
    auto permute = [&](auto&& self, size_t gi) -> void {
        if (best) return;
        if (gi == groups.size()) {
            try_order(order);
            return;
        }
        auto [b, e] = groups[gi];
        std::sort(order.begin() + b, order.begin() + e,
                  [](const Entry& x, const Entry& y) { return x.label < y.label; });
        do {
            self(self, gi + 1);
        } while (!best && std::next_permutation(order.begin() + b, order.begin() + e,
                                                [](const Entry& x, const Entry& y) {
                                                    return x.label < y.label;
                                                }));
    };
    permute(permute, 0);

    if (!best) fail(Errc::PatternMismatch, "division points fit neither cyclic pattern");
    return *best;
}

bool detect_theta_cube(const Alphabet& ab, const WordChain& c) {
    if (!is_non_interleaved_double_chain(ab, c))
        fail(Errc::NotNonInterleaved, "theta-cube detection needs a non-interleaved chain");
    TypeQuad t = type_of(ab, c);
    if (t[2] != t[4] || t[2] == 0) return false;
    // a2 = a4 forces the template A B C B^-1 A^-1 B C^-1 B^-1; check it.
    bool shaped = c.part(4) == reverse(ab, c.part(2)) && c.part(6) == c.part(2) &&
                  c.part(8) == c.part(4) && c.part(5) == reverse(ab, c.part(1)) &&
                  c.part(7) == reverse(ab, c.part(3));
    if (!shaped) fail(Errc::Internal, "a2 = a4 chain did not match the cube template");
    return true;
}

SelfIntersectionEvidence noninterleaved_witness(const Alphabet& ab, const WordChain& c) {
    if (!is_non_interleaved_double_chain(ab, c))
        fail(Errc::NotNonInterleaved, "witness extraction needs a non-interleaved chain");
    TypeQuad t = type_of(ab, c);
    if (t[1] + t[3] == 0 || t[2] + t[4] == 0 || t[2] == t[4])
        fail(Errc::CaseMismatch, "witness needs a1+a3 != 0, a2+a4 != 0 and a2 != a4");

    // Work on the rotation that puts the longer even part at position 2.
    long long rot = t[2] > t[4] ? 0 : 2;
    WordChain d = c.shifted(rot);
    TypeQuad s = type_of(ab, d);
    long long excess = s[2] - s[4];

    // (E1) U_2 = U_8^-1 X; (E2) U_6 = U_4^-1 Y; (E3) X U_3 = U_7^-1 Y^-1.
    Word u8r = reverse(ab, d.part(8));
    if (d.part(2).substr(0, u8r.size()) != u8r) fail(Errc::Internal, "(E1) failed");
    Word x = d.part(2).substr(u8r.size());
    Word u4r = reverse(ab, d.part(4));
    if (d.part(6).substr(0, u4r.size()) != u4r) fail(Errc::Internal, "(E2) failed");
    Word y = d.part(6).substr(u4r.size());
    if (x + d.part(3) != reverse(ab, d.part(7)) + reverse(ab, y)) fail(Errc::Internal, "(E3) failed");

    SelfIntersectionEvidence ev;
    ev.witness = reverse(ab, y) + reverse(ab, x);
    if (!words::is_balanced(ab, ev.witness)) fail(Errc::Internal, "witness not balanced");
    // Y^-1 ends U_{2:3}, X^-1 begins U_4 (in the rotated chain).
    long long off = 0;
    for (long long i = 1; i <= rot; ++i) off += static_cast<long long>(c.part(i).size());
    long long u4_start = off + s[1] + s[2] + s[3];
    ev.start = static_cast<int>(u4_start - excess);
    ev.length = static_cast<int>(2 * excess);
    return ev;
}

std::optional<StableHit> find_stable_self_intersection(const Alphabet& ab, const WordChain& c) {
    const std::string& reps = ab.representatives();
    for (int i = 1; i <= 8; ++i) {
        Word s = slice(c, i, i + 3);
        const int n = static_cast<int>(s.size());
        // prefix count vectors; a subword is balanced iff its endpoints match
        std::vector<std::vector<int>> pre(static_cast<size_t>(n) + 1,
                                          std::vector<int>(reps.size(), 0));
        for (int k = 0; k < n; ++k) {
            pre[static_cast<size_t>(k) + 1] = pre[static_cast<size_t>(k)];
            for (size_t r = 0; r < reps.size(); ++r) {
                if (s[static_cast<size_t>(k)] == reps[r]) pre[static_cast<size_t>(k) + 1][r]++;
                else if (s[static_cast<size_t>(k)] == ab.reverse_letter(reps[r]))
                    pre[static_cast<size_t>(k) + 1][r]--;
            }
        }
        for (int start = 0; start < n; ++start)
            for (int end = start + 1; end <= n; ++end)
                if (pre[static_cast<size_t>(start)] == pre[static_cast<size_t>(end)])
                    return StableHit{i, start, end - start};
    }
    return std::nullopt;
}

} // namespace dtile::chains
