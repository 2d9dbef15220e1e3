#include "dtile/words.hpp"

#include <algorithm>
#include <map>

namespace dtile::words {

Alphabet Alphabet::from_pairs(std::initializer_list<std::pair<char, char>> pairs) {
    Alphabet ab;
    for (auto [x, y] : pairs) {
        if (x == y) fail(Errc::BadInput, "reversal involution must be fixed-point free");
        if (ab.contains(x) || ab.contains(y)) fail(Errc::BadInput, "duplicate letter in alphabet");
        ab.table_[static_cast<unsigned char>(x)] = y;
        ab.table_[static_cast<unsigned char>(y)] = x;
        ab.reps_.push_back(x);
        ab.letters_.push_back(x);
        ab.letters_.push_back(y);
    }
    return ab;
}

const Alphabet& Alphabet::square() {
    static const Alphabet ab = from_pairs({{'R', 'L'}, {'U', 'D'}});
    return ab;
}

const Alphabet& Alphabet::abc() {
    static const Alphabet ab = from_pairs({{'A', 'a'}, {'B', 'b'}, {'C', 'c'}});
    return ab;
}

char Alphabet::reverse_letter(char c) const {
    char r = table_[static_cast<unsigned char>(c)];
    if (r == 0) fail(Errc::BadInput, std::string("letter not in alphabet: '") + c + "'");
    return r;
}

void Alphabet::check_word(std::string_view w) const {
    for (char c : w) (void)reverse_letter(c);
}

Word reverse(const Alphabet& ab, std::string_view w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(ab.reverse_letter(*it));
    return out;
}

Word flip_letters(const Alphabet& ab, std::string_view w) {
    Word out;
    out.reserve(w.size());
    for (char c : w) out.push_back(ab.reverse_letter(c));
    return out;
}

namespace {

// Per-representative signed letter counts; a subword is balanced iff its
// count vector vanishes, i.e. iff the prefix vectors at its two ends agree.
std::vector<std::vector<int>> prefix_counts(const Alphabet& ab, std::string_view w) {
    const std::string& reps = ab.representatives();
    std::array<int, 256> index{};
    index.fill(-1);
    for (size_t k = 0; k < reps.size(); ++k) {
        index[static_cast<unsigned char>(reps[k])] = static_cast<int>(k);
        index[static_cast<unsigned char>(ab.reverse_letter(reps[k]))] = static_cast<int>(k);
    }
    std::vector<std::vector<int>> pre(w.size() + 1, std::vector<int>(reps.size(), 0));
    for (size_t i = 0; i < w.size(); ++i) {
        pre[i + 1] = pre[i];
        int k = index[static_cast<unsigned char>(w[i])];
        if (k < 0) fail(Errc::BadInput, "letter not in alphabet");
        pre[i + 1][static_cast<size_t>(k)] += (w[i] == reps[static_cast<size_t>(k)]) ? 1 : -1;
    }
    return pre;
}

} // namespace

bool is_balanced(const Alphabet& ab, std::string_view w) {
    auto pre = prefix_counts(ab, w);
    return pre.front() == pre.back();
}

Word cyclic_shift(std::string_view w, long long i) {
    if (w.empty()) return Word{};
    long long n = static_cast<long long>(w.size());
    long long s = ((i % n) + n) % n;
    Word out(w.substr(static_cast<size_t>(s)));
    out += w.substr(0, static_cast<size_t>(s));
    return out;
}

std::vector<std::pair<int, int>> combinatorial_self_intersections(const Alphabet& ab,
                                                                  std::string_view w) {
    auto pre = prefix_counts(ab, w);
    const int n = static_cast<int>(w.size());
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (i == 0 && j == n) continue; // the whole word never counts here
            if (pre[static_cast<size_t>(i)] == pre[static_cast<size_t>(j)]) out.emplace_back(i, j - i);
        }
    }
    // W = w w^-1 doubles back on itself even though no proper subword shows it.
    if (n == 2 && w[1] == ab.reverse_letter(w[0])) out.emplace_back(0, 2);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_combinatorial_self_intersection(const Alphabet& ab, std::string_view w) {
    auto pre = prefix_counts(ab, w);
    const int n = static_cast<int>(w.size());
    if (n == 2 && w[1] == ab.reverse_letter(w[0])) return true;
    std::map<std::vector<int>, int> first_seen;
    for (int i = 0; i <= n; ++i) {
        auto [it, inserted] = first_seen.emplace(pre[static_cast<size_t>(i)], i);
        if (!inserted && !(it->second == 0 && i == n)) return true;
        // A vector seen at 0 and again at n only flags the whole word, which
        // does not count -- but any third occurrence in between was caught.
    }
    return false;
}

void Substitution::map(char representative, std::string_view image) {
    if (!domain_->contains(representative)) fail(Errc::BadInput, "substitution letter not in domain");
    range_->check_word(image);
    images_[static_cast<unsigned char>(representative)] = Word(image);
}

Word Substitution::apply(std::string_view w) const {
    Word out;
    for (char c : w) {
        char rc = domain_->reverse_letter(c);
        if (const auto& img = images_[static_cast<unsigned char>(c)]; img.has_value()) {
            out += *img;
        } else if (const auto& rimg = images_[static_cast<unsigned char>(rc)]; rimg.has_value()) {
            out += reverse(*range_, *rimg);
        } else {
            fail(Errc::BadInput, std::string("substitution has no image for '") + c + "'");
        }
    }
    return out;
}

ImaginaryWord ImaginaryWord::from_word(std::string_view w) {
    ImaginaryWord out;
    for (char c : w) out.push({c, false});
    return out;
}

void ImaginaryWord::push(IEntry e) {
    if (!entries_.empty() && entries_.back().letter == e.letter &&
        entries_.back().negative != e.negative) {
        entries_.pop_back();
        return;
    }
    entries_.push_back(e);
}

ImaginaryWord iconcat(const ImaginaryWord& a, const ImaginaryWord& b) {
    ImaginaryWord out = a;
    for (const IEntry& e : b.entries()) out.push(e);
    return out;
}

ImaginaryWord inegate(const ImaginaryWord& w) {
    ImaginaryWord out;
    const auto& es = w.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it) out.push({it->letter, !it->negative});
    return out;
}

ImaginaryWord ireverse(const Alphabet& ab, const ImaginaryWord& w) {
    ImaginaryWord out;
    const auto& es = w.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it)
        out.push({ab.reverse_letter(it->letter), it->negative});
    return out;
}

long long ilength(const ImaginaryWord& w) {
    long long n = 0;
    for (const IEntry& e : w.entries()) n += e.negative ? -1 : 1;
    return n;
}

IClass classify(const ImaginaryWord& w) {
    if (w.empty()) return IClass::Empty;
    bool pos = false, neg = false;
    for (const IEntry& e : w.entries()) (e.negative ? neg : pos) = true;
    if (pos && neg) return IClass::Mixed;
    return pos ? IClass::Positive : IClass::Negative;
}

std::optional<Word> to_ordinary(const ImaginaryWord& w) {
    Word out;
    out.reserve(w.entries().size());
    for (const IEntry& e : w.entries()) {
        if (e.negative) return std::nullopt;
        out.push_back(e.letter);
    }
    return out;
}

} // namespace dtile::words
