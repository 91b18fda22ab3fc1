#include "chu/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace chu {

namespace {

constexpr std::size_t kMaxCanonicalObjects = 10;  // 10! permutations is the hard stop

// Row-major word of the matrix under row order `rows` with columns sorted
// lexicographically (top-down in the permuted row order).
std::vector<Symbol> word_for_row_order(const Space& s, const std::vector<std::size_t>& rows) {
    const std::size_t na = s.object_count(), nx = s.attribute_count();
    std::vector<std::size_t> cols(nx);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    std::sort(cols.begin(), cols.end(), [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < na; ++i) {
            Symbol v1 = s.at(rows[i], c1), v2 = s.at(rows[i], c2);
            if (v1 != v2) return v1 < v2;
        }
        return c1 < c2;
    });
    std::vector<Symbol> word(na * nx);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nx; ++j) word[i * nx + j] = s.at(rows[i], cols[j]);
    return word;
}

std::vector<std::string> generic_labels(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace

Space canonical_form(const Space& space) {
    const std::size_t na = space.object_count();
    if (na > kMaxCanonicalObjects)
        throw Error(Errc::BudgetExceeded, "canonical_form: too many objects for permutation search");

    std::vector<std::size_t> rows(na);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<Symbol> best = word_for_row_order(space, rows);
    while (std::next_permutation(rows.begin(), rows.end())) {
        std::vector<Symbol> word = word_for_row_order(space, rows);
        if (word < best) best = std::move(word);
    }
    return Space(space.alphabet(), generic_labels("a", na),
                 generic_labels("x", space.attribute_count()), std::move(best));
}

std::optional<Morphism> find_isomorphism(const Space& s1, const Space& s2) {
    if (s1.alphabet() != s2.alphabet())
        throw Error(Errc::AlphabetMismatch, "find_isomorphism requires a shared alphabet");
    const std::size_t na = s1.object_count(), nx = s1.attribute_count();
    if (na != s2.object_count() || nx != s2.attribute_count()) return std::nullopt;
    if (na > kMaxCanonicalObjects)
        throw Error(Errc::BudgetExceeded, "find_isomorphism: too many objects for permutation search");

    std::vector<std::size_t> forward(na);
    std::iota(forward.begin(), forward.end(), std::size_t{0});
    // Permutations of object images in lexicographic order.
    do {
        // Match each s2 column against an unused equal s1 column pulled back
        // through the object bijection. Greedy least-index matching is exact
        // because matching within groups of equal columns is free.
        std::vector<char> used(nx, 0);
        std::vector<std::size_t> backward(nx);
        bool ok = true;
        for (std::size_t y = 0; y < nx && ok; ++y) {
            ok = false;
            for (std::size_t x = 0; x < nx; ++x) {
                if (used[x]) continue;
                bool eq = true;
                for (std::size_t a = 0; a < na; ++a)
                    if (s2.at(forward[a], y) != s1.at(a, x)) {
                        eq = false;
                        break;
                    }
                if (eq) {
                    used[x] = 1;
                    backward[y] = x;
                    ok = true;
                    break;
                }
            }
        }
        if (ok) return Morphism{s1, s2, forward, backward};
    } while (std::next_permutation(forward.begin(), forward.end()));
    return std::nullopt;
}

}  // namespace chu
