#include "chu/morphism.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chu {

Morphism identity(const Space& space) {
    Morphism m{space, space, {}, {}};
    m.forward.resize(space.object_count());
    std::iota(m.forward.begin(), m.forward.end(), std::size_t{0});
    m.backward.resize(space.attribute_count());
    std::iota(m.backward.begin(), m.backward.end(), std::size_t{0});
    return m;
}

bool validate(const Morphism& m) {
    if (m.source.alphabet() != m.target.alphabet())
        throw Error(Errc::AlphabetMismatch, "morphism endpoints use different alphabets");
    if (m.forward.size() != m.source.object_count() || m.backward.size() != m.target.attribute_count())
        throw Error(Errc::InvalidMorphism, "component map sizes do not match the endpoint spaces");
    for (std::size_t v : m.forward)
        if (v >= m.target.object_count()) throw Error(Errc::InvalidMorphism, "forward map out of range");
    for (std::size_t v : m.backward)
        if (v >= m.source.attribute_count()) throw Error(Errc::InvalidMorphism, "backward map out of range");
    for (std::size_t a = 0; a < m.source.object_count(); ++a)
        for (std::size_t y = 0; y < m.target.attribute_count(); ++y)
            if (m.target.at(m.forward[a], y) != m.source.at(a, m.backward[y])) return false;
    return true;
}

bool forward_injective(const Morphism& m) {
    std::vector<char> seen(m.target.object_count(), 0);
    for (std::size_t v : m.forward) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool forward_surjective(const Morphism& m) {
    std::vector<char> seen(m.target.object_count(), 0);
    for (std::size_t v : m.forward) seen[v] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool backward_injective(const Morphism& m) {
    std::vector<char> seen(m.source.attribute_count(), 0);
    for (std::size_t v : m.backward) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool backward_surjective(const Morphism& m) {
    std::vector<char> seen(m.source.attribute_count(), 0);
    for (std::size_t v : m.backward) seen[v] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Morphism compose(const Morphism& m2, const Morphism& m1) {
    if (m1.target != m2.source)
        throw Error(Errc::CompositionMismatch, "compose: m1.target differs from m2.source");
    Morphism out{m1.source, m2.target, {}, {}};
    out.forward.resize(m1.forward.size());
    for (std::size_t a = 0; a < m1.forward.size(); ++a) out.forward[a] = m2.forward[m1.forward[a]];
    out.backward.resize(m2.backward.size());
    for (std::size_t y = 0; y < m2.backward.size(); ++y) out.backward[y] = m1.backward[m2.backward[y]];
    return out;
}

namespace {

// Source attributes x compatible with target attribute y under the object map:
// target(f(a), y) == source(a, x) for every source object a.
std::vector<std::vector<std::size_t>> backward_candidates(const Space& source, const Space& target,
                                                          const std::vector<std::size_t>& forward) {
    std::vector<std::vector<std::size_t>> cands(target.attribute_count());
    for (std::size_t y = 0; y < target.attribute_count(); ++y) {
        for (std::size_t x = 0; x < source.attribute_count(); ++x) {
            bool ok = true;
            for (std::size_t a = 0; a < source.object_count(); ++a)
                if (target.at(forward[a], y) != source.at(a, x)) {
                    ok = false;
                    break;
                }
            if (ok) cands[y].push_back(x);
        }
    }
    return cands;
}

bool next_map(std::vector<std::size_t>& map, std::size_t radix) {
    for (std::size_t i = map.size(); i > 0; --i) {
        if (map[i - 1] + 1 < radix) {
            ++map[i - 1];
            std::fill(map.begin() + static_cast<std::ptrdiff_t>(i), map.end(), 0);
            return true;
        }
    }
    return false;
}

bool injective(const std::vector<std::size_t>& map, std::size_t radix) {
    std::vector<char> seen(radix, 0);
    for (std::size_t v : map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// Injection of source attributes into target attributes along the candidate
// relation (Kuhn's matching). Existence decides backward surjectivity for some
// completing choice.
bool matchable(const std::vector<std::vector<std::size_t>>& cands, std::size_t n_source_attrs,
               std::vector<std::ptrdiff_t>* out_owner = nullptr) {
    std::vector<std::vector<std::size_t>> adj(n_source_attrs);  // x -> ys with x in cands[y]
    for (std::size_t y = 0; y < cands.size(); ++y)
        for (std::size_t x : cands[y]) adj[x].push_back(y);
    std::vector<std::ptrdiff_t> owner(cands.size(), -1);  // y -> x, -1 when unmatched
    std::vector<char> used;
    std::function<bool(std::size_t)> try_match = [&](std::size_t x) {
        for (std::size_t y : adj[x]) {
            if (used[y]) continue;
            used[y] = 1;
            if (owner[y] < 0 || try_match(static_cast<std::size_t>(owner[y]))) {
                owner[y] = static_cast<std::ptrdiff_t>(x);
                return true;
            }
        }
        return false;
    };
    for (std::size_t x = 0; x < n_source_attrs; ++x) {
        used.assign(cands.size(), 0);
        if (!try_match(x)) return false;
    }
    if (out_owner) *out_owner = std::move(owner);
    return true;
}

}  // namespace

bool for_each_morphism(const Space& source, const Space& target, MorphismFilter filter,
                       const std::function<bool(const Morphism&)>& visit, const Budget& budget) {
    if (source.alphabet() != target.alphabet())
        throw Error(Errc::AlphabetMismatch, "morphism enumeration requires a shared alphabet");
    const std::size_t nb = target.object_count();
    const std::size_t na = source.object_count();
    if (na > 0 && nb == 0) return true;  // no object maps at all
    double work = std::pow(static_cast<double>(std::max<std::size_t>(nb, 1)), static_cast<double>(na)) *
                  std::pow(static_cast<double>(std::max<std::size_t>(source.attribute_count(), 1)),
                           static_cast<double>(target.attribute_count()));
    if (work > static_cast<double>(budget.max_morphism_search))
        throw Error(Errc::BudgetExceeded, "morphism search space exceeds budget");

    MorphismEnumerator en(source, target, filter);
    while (auto m = en.next())
        if (!visit(*m)) return false;
    return true;
}

std::vector<Morphism> enumerate_morphisms(const Space& source, const Space& target, MorphismFilter filter,
                                          const Budget& budget) {
    std::vector<Morphism> out;
    for_each_morphism(
        source, target, filter,
        [&](const Morphism& m) {
            out.push_back(m);
            return true;
        },
        budget);
    return out;
}

std::size_t count_morphisms(const Space& source, const Space& target, MorphismFilter filter,
                            const Budget& budget) {
    std::size_t n = 0;
    for_each_morphism(
        source, target, filter,
        [&](const Morphism&) {
            ++n;
            return true;
        },
        budget);
    return n;
}

std::optional<Morphism> find_monic_c(const Space& source, const Space& target, const Budget& budget) {
    if (source.alphabet() != target.alphabet())
        throw Error(Errc::AlphabetMismatch, "monic search requires a shared alphabet");
    if (source.object_count() > target.object_count()) return std::nullopt;
    if (source.attribute_count() > 0 && target.attribute_count() == 0) return std::nullopt;
    (void)budget;

    std::vector<std::size_t> forward(source.object_count(), 0);
    do {
        if (!injective(forward, target.object_count())) continue;
        auto cands = backward_candidates(source, target, forward);
        bool all_nonempty =
            std::all_of(cands.begin(), cands.end(), [](const auto& c) { return !c.empty(); });
        if (!all_nonempty) continue;
        std::vector<std::ptrdiff_t> owner;
        if (!matchable(cands, source.attribute_count(), &owner)) continue;
        // The matching covers every source attribute; unmatched target
        // attributes take their least candidate.
        std::vector<std::size_t> backward(target.attribute_count());
        for (std::size_t y = 0; y < backward.size(); ++y)
            backward[y] = owner[y] >= 0 ? static_cast<std::size_t>(owner[y]) : cands[y].front();
        Morphism m{source, target, forward, backward};
        if (validate(m) && forward_injective(m) && backward_surjective(m)) return m;
    } while (next_map(forward, std::max<std::size_t>(target.object_count(), 1)));
    return std::nullopt;
}

std::optional<ForwardCompletion> complete_forward(const Space& source, const Space& target,
                                                  const std::vector<std::size_t>& forward) {
    if (forward.size() != source.object_count())
        throw Error(Errc::InvalidMorphism, "complete_forward: object map has wrong size");
    auto cands = backward_candidates(source, target, forward);
    bool unique = true;
    std::vector<std::size_t> backward(target.attribute_count());
    for (std::size_t y = 0; y < cands.size(); ++y) {
        if (cands[y].empty()) return std::nullopt;
        if (cands[y].size() > 1) unique = false;
        backward[y] = cands[y].front();
    }
    Morphism m{source, target, forward, std::move(backward)};
    return ForwardCompletion{std::move(m), unique};
}

MorphismEnumerator::MorphismEnumerator(Space source, Space target, MorphismFilter filter)
    : source_(std::move(source)), target_(std::move(target)), filter_(filter) {
    if (source_.alphabet() != target_.alphabet())
        throw Error(Errc::AlphabetMismatch, "morphism enumeration requires a shared alphabet");
    forward_.assign(source_.object_count(), 0);
    if (source_.object_count() > 0 && target_.object_count() == 0) done_ = true;
}

bool MorphismEnumerator::advance_forward() {
    forward_fresh_ = true;
    return next_map(forward_, std::max<std::size_t>(target_.object_count(), 1));
}

bool MorphismEnumerator::prepare_backward() {
    if (filter_ != MorphismFilter::All && !injective(forward_, target_.object_count())) return false;
    candidates_ = backward_candidates(source_, target_, forward_);
    for (const auto& c : candidates_)
        if (c.empty()) return false;
    if (filter_ == MorphismFilter::MonicC && !matchable(candidates_, source_.attribute_count()))
        return false;
    choice_.assign(candidates_.size(), 0);
    return true;
}

std::optional<Morphism> MorphismEnumerator::next() {
    while (!done_) {
        if (forward_fresh_) {
            forward_fresh_ = false;
            if (!prepare_backward()) {
                if (!advance_forward()) done_ = true;
                continue;
            }
        } else {
            // advance the backward odometer
            bool moved = false;
            for (std::size_t i = choice_.size(); i > 0; --i) {
                if (choice_[i - 1] + 1 < candidates_[i - 1].size()) {
                    ++choice_[i - 1];
                    std::fill(choice_.begin() + static_cast<std::ptrdiff_t>(i), choice_.end(), 0);
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                if (!advance_forward()) done_ = true;
                continue;
            }
        }
        Morphism m{source_, target_, forward_, {}};
        m.backward.resize(choice_.size());
        for (std::size_t y = 0; y < choice_.size(); ++y) m.backward[y] = candidates_[y][choice_[y]];
        if (filter_ == MorphismFilter::MonicC && !backward_surjective(m)) continue;
        return m;
    }
    return std::nullopt;
}

}  // namespace chu
