#include "chu/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chu/canonical.hpp"

namespace chu {

bool satisfies(const Space& space, SpaceFilter filter) {
    switch (filter) {
        case SpaceFilter::All: return true;
        case SpaceFilter::Extensional: return is_extensional(space);
        case SpaceFilter::Biextensional: return is_biextensional(space);
        case SpaceFilter::Separable: return is_separable(space);
        case SpaceFilter::StronglyFinite:
            return space.attribute_count() >= 1 && is_extensional(space);
    }
    return false;
}

namespace {

std::vector<std::string> labels(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// One (|A|,|X|) cell. Column order never matters up to isomorphism, so we walk
// non-decreasing sequences of column codes instead of raw matrices, then
// canonicalize to dedup row permutations as well.
void enumerate_cell(const Alphabet& alphabet, std::size_t na, std::size_t nx, SpaceFilter filter,
                    const Budget& budget, std::set<std::vector<Symbol>>& out_words) {
    const std::size_t k = alphabet.size();
    double raw = std::pow(static_cast<double>(k), static_cast<double>(na * nx));
    if (raw > static_cast<double>(budget.max_raw_matrices))
        throw Error(Errc::BudgetExceeded, "space enumeration cell exceeds raw-matrix budget");

    std::uint64_t n_codes = 1;
    for (std::size_t i = 0; i < na; ++i) n_codes *= k;

    const bool need_distinct_columns =
        filter == SpaceFilter::Extensional || filter == SpaceFilter::Biextensional ||
        filter == SpaceFilter::StronglyFinite;
    if (need_distinct_columns && nx > n_codes) return;
    if (filter == SpaceFilter::StronglyFinite && nx == 0) return;

    std::vector<std::uint64_t> codes(nx, 0);
    auto advance = [&]() {
        for (std::size_t i = nx; i > 0; --i) {
            std::uint64_t ceiling = need_distinct_columns ? n_codes - (nx - i) : n_codes;
            if (codes[i - 1] + 1 < ceiling) {
                ++codes[i - 1];
                std::uint64_t v = codes[i - 1];
                for (std::size_t j = i; j < nx; ++j) codes[j] = need_distinct_columns ? ++v : v;
                return true;
            }
        }
        return false;
    };
    if (need_distinct_columns)  // start strictly increasing
        for (std::size_t j = 0; j < nx; ++j) codes[j] = j;

    std::vector<Symbol> matrix(na * nx);
    while (true) {
        for (std::size_t x = 0; x < nx; ++x) {
            std::uint64_t c = codes[x];
            for (std::size_t a = na; a > 0; --a) {
                matrix[(a - 1) * nx + x] = static_cast<Symbol>(c % k);
                c /= k;
            }
        }
        Space s(alphabet, labels("a", na), labels("x", nx), matrix);
        if (satisfies(s, filter)) out_words.insert(canonical_form(s).matrix());
        if (!advance()) break;
    }
}

}  // namespace

bool for_each_space(const Alphabet& alphabet, std::size_t max_objects, std::size_t max_attributes,
                    SpaceFilter filter, const std::function<bool(const Space&)>& visit,
                    const Budget& budget) {
    for (std::size_t na = 0; na <= max_objects; ++na) {
        for (std::size_t nx = 0; nx <= max_attributes; ++nx) {
            std::set<std::vector<Symbol>> words;
            enumerate_cell(alphabet, na, nx, filter, budget, words);
            for (const auto& w : words) {
                Space s(alphabet, labels("a", na), labels("x", nx), w);
                if (!visit(s)) return false;
            }
        }
    }
    return true;
}

std::vector<Space> enumerate_spaces(const Alphabet& alphabet, std::size_t max_objects,
                                    std::size_t max_attributes, SpaceFilter filter,
                                    const Budget& budget) {
    std::vector<Space> out;
    for_each_space(
        alphabet, max_objects, max_attributes, filter,
        [&](const Space& s) {
            out.push_back(s);
            return true;
        },
        budget);
    return out;
}

}  // namespace chu
