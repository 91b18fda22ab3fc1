#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chu {

/// Symbol values are indices into an Alphabet.
using Symbol = std::uint8_t;

enum class Errc {
    InvalidSpace,
    InvalidMorphism,
    ParseError,
    AlphabetMismatch,
    CompositionMismatch,
    CategoryMembershipViolated,
    BudgetExceeded,
    ForwardNotInjective,
    InvalidLeg,
    InvalidCocone,
    NotBiextensionalChain,
    NotStronglyFinite,
    NotMonic,
    EmptyApexAttributes,
    WindowExhausted,
    NotStrictlyIncreasing,
    InvalidChain,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Budgets for the exhaustive search primitives. All limits are hard: the
/// operations throw Errc::BudgetExceeded rather than silently truncating.
struct Budget {
    std::uint64_t max_raw_matrices = std::uint64_t{1} << 24;  // per (|A|,|X|) enumeration cell
    std::uint64_t max_functions = std::uint64_t{1} << 20;     // discreteness: |Sigma|^|A|
    std::uint64_t max_morphism_search = std::uint64_t{1} << 26;
    std::uint64_t max_threads = std::uint64_t{1} << 20;
};

/// A finite, totally ordered symbol set. The order is part of the value: it
/// drives deterministic enumeration everywhere downstream.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    static Alphabet binary();  // {"0","1"}

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
};

/// A finite Chu space: labeled object and attribute sets with a total
/// satisfaction matrix stored row-major as alphabet indices. Immutable after
/// construction; all operations on spaces are pure.
class Space {
public:
    Space() = default;
    Space(Alphabet alphabet, std::vector<std::string> objects, std::vector<std::string> attributes,
          std::vector<Symbol> matrix);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }
    const std::vector<Symbol>& matrix() const noexcept { return matrix_; }

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }

    Symbol at(std::size_t object, std::size_t attribute) const {
        return matrix_[object * attributes_.size() + attribute];
    }

    /// The function r(a,-) as a symbol vector of length |X|.
    std::span<const Symbol> row(std::size_t object) const {
        return {matrix_.data() + object * attributes_.size(), attributes_.size()};
    }

    /// The function r(-,x) as a symbol vector of length |A|.
    std::vector<Symbol> column(std::size_t attribute) const;

    std::optional<std::size_t> object_index(std::string_view label) const;
    std::optional<std::size_t> attribute_index(std::string_view label) const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    Alphabet alphabet_;
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Symbol> matrix_;
};

/// No repeated columns. Note the empty-object edge: with |A| = 0 and
/// |X| >= 2 every column is the empty vector, so the space is not extensional.
bool is_extensional(const Space& space);

/// No repeated rows.
bool is_separable(const Space& space);

bool is_biextensional(const Space& space);

struct DiscretenessResult {
    bool discrete = false;
    /// Lexicographically least function A -> Sigma not realized as a column;
    /// meaningful only when discrete is false.
    std::vector<Symbol> missing_function;
};

/// Every function A -> Sigma appears as a column. Enumerates |Sigma|^|A|
/// candidate functions, so it is budget-guarded.
DiscretenessResult is_discrete(const Space& space, const Budget& budget = {});

}  // namespace chu
