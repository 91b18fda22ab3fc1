#include "chu/space.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace chu {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw Error(Errc::InvalidSpace, "alphabet must contain at least one symbol");
    std::unordered_set<std::string_view> seen;
    for (const auto& s : symbols_)
        if (!seen.insert(s).second)
            throw Error(Errc::InvalidSpace, "alphabet symbols must be pairwise distinct: " + s);
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return i;
    return std::nullopt;
}

namespace {

void check_labels_distinct(const std::vector<std::string>& labels, const char* kind) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw Error(Errc::InvalidSpace, std::string(kind) + " labels must be pairwise distinct: " + l);
}

}  // namespace

Space::Space(Alphabet alphabet, std::vector<std::string> objects, std::vector<std::string> attributes,
             std::vector<Symbol> matrix)
    : alphabet_(std::move(alphabet)),
      objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      matrix_(std::move(matrix)) {
    check_labels_distinct(objects_, "object");
    check_labels_distinct(attributes_, "attribute");
    if (matrix_.size() != objects_.size() * attributes_.size())
        throw Error(Errc::InvalidSpace, "matrix size does not match |A|*|X|");
    for (Symbol s : matrix_)
        if (s >= alphabet_.size())
            throw Error(Errc::InvalidSpace, "matrix entry out of alphabet range");
}

std::vector<Symbol> Space::column(std::size_t attribute) const {
    std::vector<Symbol> col(objects_.size());
    for (std::size_t a = 0; a < objects_.size(); ++a) col[a] = at(a, attribute);
    return col;
}

std::optional<std::size_t> Space::object_index(std::string_view label) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == label) return i;
    return std::nullopt;
}

std::optional<std::size_t> Space::attribute_index(std::string_view label) const {
    for (std::size_t i = 0; i < attributes_.size(); ++i)
        if (attributes_[i] == label) return i;
    return std::nullopt;
}

bool is_extensional(const Space& space) {
    std::set<std::vector<Symbol>> cols;
    for (std::size_t x = 0; x < space.attribute_count(); ++x)
        if (!cols.insert(space.column(x)).second) return false;
    return true;
}

bool is_separable(const Space& space) {
    std::set<std::vector<Symbol>> rows;
    for (std::size_t a = 0; a < space.object_count(); ++a) {
        auto r = space.row(a);
        if (!rows.emplace(r.begin(), r.end()).second) return false;
    }
    return true;
}

bool is_biextensional(const Space& space) { return is_extensional(space) && is_separable(space); }

DiscretenessResult is_discrete(const Space& space, const Budget& budget) {
    const std::size_t n = space.object_count();
    const std::size_t k = space.alphabet().size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(k);
    if (total > static_cast<double>(budget.max_functions))
        throw Error(Errc::BudgetExceeded, "discreteness check: |Sigma|^|A| exceeds budget");

    std::set<std::vector<Symbol>> cols;
    for (std::size_t x = 0; x < space.attribute_count(); ++x) cols.insert(space.column(x));

    // Candidate functions in lexicographic order, so the first miss is the
    // lexicographically least one.
    std::vector<Symbol> fn(n, 0);
    while (true) {
        if (!cols.count(fn)) return {false, fn};
        std::size_t i = n;
        while (i > 0) {
            if (fn[i - 1] + 1u < k) {
                ++fn[i - 1];
                std::fill(fn.begin() + static_cast<std::ptrdiff_t>(i), fn.end(), 0);
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
    return {true, {}};
}

}  // namespace chu
