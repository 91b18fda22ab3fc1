#include "chu/chain.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace chu {

const char* chain_category_name(ChainCategory c) {
    switch (c) {
        case ChainCategory::iC: return "iC";
        case ChainCategory::iE: return "iE";
        case ChainCategory::iB: return "iB";
    }
    return "?";
}

struct Chain::State {
    bool is_explicit = true;
    ChainCategory claim = ChainCategory::iC;
    bool windowed = false;
    std::string rule;
    std::optional<std::size_t> window;

    StageFn stage_fn;
    LinkFn link_fn;

    mutable std::mutex mu;
    mutable std::vector<Space> stages;
    mutable std::vector<Morphism> links;
};

Chain Chain::explicit_chain(std::vector<Space> stages, std::vector<Morphism> links,
                            ChainCategory claim) {
    if (stages.empty() || links.size() + 1 != stages.size())
        throw Error(Errc::InvalidChain, "explicit chain needs n >= 1 stages and n-1 links");
    Chain c;
    c.state_ = std::make_shared<State>();
    c.state_->claim = claim;
    c.state_->stages = std::move(stages);
    c.state_->links = std::move(links);
    return c;
}

Chain Chain::generated(StageFn stage, LinkFn link, ChainCategory claim, bool windowed,
                       std::string rule, std::optional<std::size_t> window) {
    Chain c;
    c.state_ = std::make_shared<State>();
    c.state_->is_explicit = false;
    c.state_->claim = claim;
    c.state_->windowed = windowed;
    c.state_->rule = std::move(rule);
    c.state_->window = window;
    c.state_->stage_fn = std::move(stage);
    c.state_->link_fn = std::move(link);
    return c;
}

bool Chain::is_explicit() const { return state_->is_explicit; }

std::optional<std::size_t> Chain::length() const {
    if (!state_->is_explicit) return std::nullopt;
    return state_->stages.size();
}

ChainCategory Chain::claim() const { return state_->claim; }
bool Chain::windowed() const { return state_->windowed; }
const std::string& Chain::rule() const { return state_->rule; }
std::optional<std::size_t> Chain::window() const { return state_->window; }

const Space& Chain::stage(std::size_t i) const {
    State& s = *state_;
    if (s.is_explicit) {
        if (i >= s.stages.size()) throw Error(Errc::InvalidChain, "stage index past chain length");
        return s.stages[i];
    }
    std::scoped_lock lock(s.mu);
    while (s.stages.size() <= i) s.stages.push_back(s.stage_fn(s.stages.size()));
    return s.stages[i];
}

const Morphism& Chain::link(std::size_t i) const {
    State& s = *state_;
    if (s.is_explicit) {
        if (i >= s.links.size()) throw Error(Errc::InvalidChain, "link index past chain length");
        return s.links[i];
    }
    stage(i + 1);  // materialize endpoints first (may throw WindowExhausted)
    std::scoped_lock lock(s.mu);
    while (s.links.size() <= i) s.links.push_back(s.link_fn(s.links.size()));
    return s.links[i];
}

void validate(const Chain& chain, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
        const Space& s = chain.stage(i);
        bool member = chain.claim() == ChainCategory::iC ||
                      (chain.claim() == ChainCategory::iE ? is_extensional(s) : is_biextensional(s));
        if (!member)
            throw Error(Errc::CategoryMembershipViolated,
                        std::string("stage ") + std::to_string(i + 1) + " is not in " +
                            chain_category_name(chain.claim()));
    }
    for (std::size_t i = 0; i + 1 < upto; ++i) {
        const Morphism& m = chain.link(i);
        if (m.source != chain.stage(i) || m.target != chain.stage(i + 1) || !validate(m))
            throw Error(Errc::InvalidChain,
                        std::string("link ") + std::to_string(i + 1) + " is not a valid morphism");
        bool monic = forward_injective(m) &&
                     (chain.claim() != ChainCategory::iC || backward_surjective(m));
        if (!monic)
            throw Error(Errc::NotMonic, std::string("link ") + std::to_string(i + 1) +
                                            " is not monic in " + chain_category_name(chain.claim()));
    }
}

namespace {

// Label-threaded object universe for stages 0..k-1: every stage object is
// assigned a colimit object id; forward maps preserve ids.
struct ObjectUniverse {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> stage_to_colimit;  // per stage, object -> id
    std::vector<std::size_t> first_stage;                    // per id
    std::vector<std::size_t> first_index;                    // per id, object index there
};

ObjectUniverse thread_objects(const Chain& chain, std::size_t k) {
    ObjectUniverse u;
    std::set<std::string> used;
    auto fresh = [&](std::string base) {
        while (!used.insert(base).second) base += "'";
        return base;
    };
    for (std::size_t i = 0; i < k; ++i) {
        const Space& s = chain.stage(i);
        std::vector<std::size_t> ids(s.object_count(), SIZE_MAX);
        if (i > 0) {
            const Morphism& m = chain.link(i - 1);
            if (m.source != chain.stage(i - 1) || m.target != s || !validate(m))
                throw Error(Errc::InvalidChain, "chain link is not a valid morphism");
            if (!forward_injective(m))
                throw Error(Errc::ForwardNotInjective, "chain link forward map is not injective");
            for (std::size_t a = 0; a < m.forward.size(); ++a)
                ids[m.forward[a]] = u.stage_to_colimit[i - 1][a];
        }
        for (std::size_t b = 0; b < s.object_count(); ++b) {
            if (ids[b] != SIZE_MAX) continue;
            ids[b] = u.labels.size();
            u.labels.push_back(fresh(s.objects()[b]));
            u.first_stage.push_back(i);
            u.first_index.push_back(b);
        }
        u.stage_to_colimit.push_back(std::move(ids));
    }
    return u;
}

std::size_t backward_image_size(const Morphism& m) {
    std::set<std::size_t> im(m.backward.begin(), m.backward.end());
    return im.size();
}

}  // namespace

ColimitResult colimit(const Chain& chain, std::size_t depth, const Budget& budget) {
    if (depth == 0) throw Error(Errc::InvalidChain, "colimit depth must be at least 1");
    std::size_t k = depth;
    bool exact = false;
    if (auto n = chain.length()) {
        k = std::min(depth, *n);
        exact = k == *n;
    }
    validate(chain, k);
    ObjectUniverse u = thread_objects(chain, k);
    const Space& last = chain.stage(k - 1);

    if (last.attribute_count() > budget.max_threads)
        throw Error(Errc::BudgetExceeded, "thread count exceeds budget");

    // Threads are determined by their last entry: walk each attribute of the
    // last stage down through the backward maps.
    std::vector<std::vector<std::size_t>> threads(last.attribute_count(),
                                                  std::vector<std::size_t>(k));
    for (std::size_t x = 0; x < last.attribute_count(); ++x) {
        threads[x][k - 1] = x;
        for (std::size_t j = k - 1; j > 0; --j)
            threads[x][j - 1] = chain.link(j - 1).backward[threads[x][j]];
    }
    std::sort(threads.begin(), threads.end());

    std::vector<std::string> attr_labels(threads.size());
    for (std::size_t t = 0; t < threads.size(); ++t) {
        std::string label;
        for (std::size_t j = 0; j < k; ++j) {
            if (j) label += '|';
            label += chain.stage(j).attributes()[threads[t][j]];
        }
        attr_labels[t] = std::move(label);
    }

    // Every colimit object is hit by the last stage (ids thread forward), so
    // the matrix is the last stage's matrix under the id/thread relabeling.
    std::vector<std::size_t> last_of_id(u.labels.size());
    for (std::size_t b = 0; b < last.object_count(); ++b)
        last_of_id[u.stage_to_colimit[k - 1][b]] = b;
    std::vector<Symbol> matrix(u.labels.size() * threads.size());
    for (std::size_t id = 0; id < u.labels.size(); ++id)
        for (std::size_t t = 0; t < threads.size(); ++t)
            matrix[id * threads.size() + t] = last.at(last_of_id[id], threads[t][k - 1]);

    ColimitResult out;
    out.space = Space(last.alphabet(), u.labels, std::move(attr_labels), std::move(matrix));
    out.depth = k;
    out.exact = exact;
    out.threads = threads;
    for (std::size_t i = 0; i < k; ++i) {
        Morphism psi{chain.stage(i), out.space, u.stage_to_colimit[i], {}};
        psi.backward.resize(threads.size());
        for (std::size_t t = 0; t < threads.size(); ++t) psi.backward[t] = threads[t][i];
        out.injections.push_back(std::move(psi));
    }

    if (k >= 2) {
        try {
            std::size_t count_prev = chain.stage(k - 2).attribute_count();
            std::size_t ext_prev = backward_image_size(chain.link(k - 2));
            std::size_t ext_cur = backward_image_size(chain.link(k - 1));
            out.stabilized =
                count_prev == last.attribute_count() && ext_prev == ext_cur;
        } catch (const Error&) {
            out.stabilized = false;  // next stage unavailable
        }
    }
    return out;
}

bool validate_cocone(const Chain& chain, const Space& apex, const std::vector<Morphism>& legs,
                     std::size_t upto) {
    if (legs.size() < upto) throw Error(Errc::InvalidLeg, "cocone is missing legs");
    for (std::size_t i = 0; i < upto; ++i)
        if (legs[i].source != chain.stage(i) || legs[i].target != apex || !validate(legs[i]))
            throw Error(Errc::InvalidLeg,
                        std::string("leg ") + std::to_string(i + 1) + " is not a valid morphism");
    for (std::size_t i = 0; i + 1 < upto; ++i) {
        Morphism composite = compose(legs[i + 1], chain.link(i));
        if (composite.forward != legs[i].forward || composite.backward != legs[i].backward)
            return false;
    }
    return true;
}

bool check_extensionality_preserved(const Chain& chain, const ColimitResult& result) {
    for (std::size_t i = 0; i < result.depth; ++i)
        if (!is_extensional(chain.stage(i)))
            throw Error(Errc::CategoryMembershipViolated, "chain stage is not extensional");
    return is_extensional(result.space);
}

bool check_separability_preserved(const Chain& chain, const ColimitResult& result) {
    for (std::size_t i = 0; i < result.depth; ++i)
        if (!is_biextensional(chain.stage(i)))
            throw Error(Errc::NotBiextensionalChain, "chain stage is not biextensional");
    // A separating thread for objects (a, b) is a colimit attribute whose
    // column differs at a and b.
    const Space& s = result.space;
    for (std::size_t a = 0; a < s.object_count(); ++a)
        for (std::size_t b = a + 1; b < s.object_count(); ++b) {
            bool separated = false;
            for (std::size_t t = 0; t < s.attribute_count() && !separated; ++t)
                separated = s.at(a, t) != s.at(b, t);
            if (!separated) return false;
        }
    return true;
}

std::optional<Morphism> mediate(const Chain& chain, const ColimitResult& result,
                                const Space& other_apex, const std::vector<Morphism>& other_legs) {
    if (!validate_cocone(chain, other_apex, other_legs, result.depth))
        throw Error(Errc::InvalidCocone, "other legs do not form a cocone");

    const std::size_t k = result.depth;
    std::vector<std::size_t> forward(result.space.object_count(), SIZE_MAX);
    for (std::size_t i = 0; i < k; ++i) {
        const Morphism& psi = result.injections[i];
        for (std::size_t a = 0; a < psi.forward.size(); ++a)
            if (forward[psi.forward[a]] == SIZE_MAX)
                forward[psi.forward[a]] = other_legs[i].forward[a];
    }

    std::map<std::vector<std::size_t>, std::size_t> thread_index;
    for (std::size_t t = 0; t < result.threads.size(); ++t) thread_index[result.threads[t]] = t;

    std::vector<std::size_t> backward(other_apex.attribute_count());
    std::vector<std::size_t> entries(k);
    for (std::size_t y = 0; y < other_apex.attribute_count(); ++y) {
        for (std::size_t m = 0; m < k; ++m) entries[m] = other_legs[m].backward[y];
        auto it = thread_index.find(entries);
        if (it == thread_index.end()) return std::nullopt;
        backward[y] = it->second;
    }

    Morphism med{result.space, other_apex, std::move(forward), std::move(backward)};
    if (!validate(med)) throw Error(Errc::InvalidCocone, "mediating candidate fails adjointness");
    return med;
}

Chain normalize_to_inclusions(const Chain& chain, std::optional<std::size_t> upto) {
    std::size_t k;
    if (auto n = chain.length())
        k = upto ? std::min(*upto, *n) : *n;
    else if (upto)
        k = *upto;
    else
        throw Error(Errc::InvalidChain, "normalizing a generated chain requires a stage count");
    if (k == 0) throw Error(Errc::InvalidChain, "cannot normalize an empty prefix");

    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!forward_injective(chain.link(i)))
            throw Error(Errc::ForwardNotInjective, "chain link forward map is not injective");

    ObjectUniverse u = thread_objects(chain, k);
    std::vector<Space> stages;
    for (std::size_t i = 0; i < k; ++i) {
        const Space& s = chain.stage(i);
        std::vector<std::string> objs(s.object_count());
        for (std::size_t b = 0; b < s.object_count(); ++b)
            objs[b] = u.labels[u.stage_to_colimit[i][b]];
        stages.emplace_back(s.alphabet(), std::move(objs), s.attributes(), s.matrix());
    }
    std::vector<Morphism> links;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const Morphism& m = chain.link(i);
        links.push_back(Morphism{stages[i], stages[i + 1], m.forward, m.backward});
    }
    return Chain::explicit_chain(std::move(stages), std::move(links), chain.claim());
}

}  // namespace chu
