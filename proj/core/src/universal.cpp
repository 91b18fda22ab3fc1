#include "chu/universal.hpp"

#include <algorithm>
#include <set>

#include "chu/enumerate.hpp"

namespace chu {

bool is_strongly_finite(const Space& space) {
    return space.attribute_count() >= 1 && is_extensional(space);
}

namespace {

void require_monic_ic(const Morphism& m, const char* what) {
    if (!validate(m)) throw Error(Errc::InvalidMorphism, std::string(what) + " fails adjointness");
    if (!forward_injective(m) || !backward_surjective(m))
        throw Error(Errc::NotMonic, std::string(what) + " is not monic in iC");
}

}  // namespace

AmalgamationSquare amalgamate(const Space& base, const Morphism& into_left,
                              const Morphism& into_right) {
    if (into_left.source != base || into_right.source != base)
        throw Error(Errc::InvalidMorphism, "amalgamation legs must share the base as source");
    require_monic_ic(into_left, "left leg");
    require_monic_ic(into_right, "right leg");

    AmalgamationSquare sq;
    sq.base = base;
    sq.left = into_left.target;
    sq.right = into_right.target;
    sq.into_left = into_left;
    sq.into_right = into_right;

    // Objects: all of the left space, then the right space's non-base
    // objects with fresh labels. Base objects are shared through their two
    // images.
    std::vector<std::string> objects = sq.left.objects();
    std::set<std::string> used(objects.begin(), objects.end());
    std::vector<std::size_t> l_map(sq.left.object_count());
    for (std::size_t a = 0; a < l_map.size(); ++a) l_map[a] = a;
    std::vector<std::size_t> r_map(sq.right.object_count(), SIZE_MAX);
    for (std::size_t b = 0; b < base.object_count(); ++b)
        r_map[into_right.forward[b]] = into_left.forward[b];
    std::vector<std::size_t> owner_right(sq.right.object_count());  // apex row source
    for (std::size_t a = 0; a < sq.right.object_count(); ++a) {
        if (r_map[a] != SIZE_MAX) continue;
        r_map[a] = objects.size();
        std::string label = sq.right.objects()[a];
        while (!used.insert(label).second) label += ".r";
        objects.push_back(std::move(label));
    }

    for (std::size_t x1 = 0; x1 < sq.left.attribute_count(); ++x1)
        for (std::size_t x2 = 0; x2 < sq.right.attribute_count(); ++x2)
            if (into_left.backward[x1] == into_right.backward[x2]) sq.pairs.emplace_back(x1, x2);
    if (sq.pairs.empty())
        throw Error(Errc::EmptyApexAttributes, "no compatible attribute pair; broken preconditions");

    std::vector<std::string> attrs;
    attrs.reserve(sq.pairs.size());
    for (auto [x1, x2] : sq.pairs)
        attrs.push_back("(" + sq.left.attributes()[x1] + "," + sq.right.attributes()[x2] + ")");

    std::vector<std::size_t> right_of_apex(objects.size(), SIZE_MAX);
    for (std::size_t a = 0; a < sq.right.object_count(); ++a) right_of_apex[r_map[a]] = a;
    std::vector<Symbol> matrix(objects.size() * sq.pairs.size());
    for (std::size_t row = 0; row < objects.size(); ++row)
        for (std::size_t t = 0; t < sq.pairs.size(); ++t)
            matrix[row * sq.pairs.size() + t] =
                row < sq.left.object_count()
                    ? sq.left.at(row, sq.pairs[t].first)
                    : sq.right.at(right_of_apex[row], sq.pairs[t].second);
    sq.apex = Space(base.alphabet(), std::move(objects), std::move(attrs), std::move(matrix));

    sq.from_left = Morphism{sq.left, sq.apex, l_map, {}};
    sq.from_right = Morphism{sq.right, sq.apex, r_map, {}};
    sq.from_left.backward.reserve(sq.pairs.size());
    sq.from_right.backward.reserve(sq.pairs.size());
    for (auto [x1, x2] : sq.pairs) {
        sq.from_left.backward.push_back(x1);
        sq.from_right.backward.push_back(x2);
    }

    require_monic_ic(sq.from_left, "apex left leg");
    require_monic_ic(sq.from_right, "apex right leg");
    Morphism via_left = compose(sq.from_left, into_left);
    Morphism via_right = compose(sq.from_right, into_right);
    if (via_left.forward != via_right.forward || via_left.backward != via_right.backward)
        throw Error(Errc::InvalidMorphism, "amalgamation square does not commute");
    return sq;
}

AmalgamationSquare reduce_apex(const AmalgamationSquare& square) {
    std::vector<char> keep(square.pairs.size(), 0);
    std::vector<char> left_covered(square.left.attribute_count(), 0);
    std::vector<char> right_covered(square.right.attribute_count(), 0);
    for (std::size_t t = 0; t < square.pairs.size(); ++t)
        if (!left_covered[square.pairs[t].first]) {
            keep[t] = 1;
            left_covered[square.pairs[t].first] = 1;
            right_covered[square.pairs[t].second] = 1;
        }
    for (std::size_t t = 0; t < square.pairs.size(); ++t)
        if (!right_covered[square.pairs[t].second]) {
            keep[t] = 1;
            right_covered[square.pairs[t].second] = 1;
        }

    AmalgamationSquare out = square;
    out.pairs.clear();
    std::vector<std::string> attrs;
    std::vector<std::size_t> kept;
    for (std::size_t t = 0; t < square.pairs.size(); ++t)
        if (keep[t]) {
            kept.push_back(t);
            out.pairs.push_back(square.pairs[t]);
            attrs.push_back(square.apex.attributes()[t]);
        }
    std::vector<Symbol> matrix(square.apex.object_count() * kept.size());
    for (std::size_t row = 0; row < square.apex.object_count(); ++row)
        for (std::size_t t = 0; t < kept.size(); ++t)
            matrix[row * kept.size() + t] = square.apex.at(row, kept[t]);
    out.apex = Space(square.apex.alphabet(), square.apex.objects(), std::move(attrs),
                     std::move(matrix));

    out.from_left = Morphism{square.left, out.apex, square.from_left.forward, {}};
    out.from_right = Morphism{square.right, out.apex, square.from_right.forward, {}};
    for (auto [x1, x2] : out.pairs) {
        out.from_left.backward.push_back(x1);
        out.from_right.backward.push_back(x2);
    }
    require_monic_ic(out.from_left, "reduced apex left leg");
    require_monic_ic(out.from_right, "reduced apex right leg");
    return out;
}

ColimitResult bifinite_from_chain(const Chain& chain, std::size_t depth, const Budget& budget) {
    std::size_t k = depth;
    if (auto n = chain.length()) k = std::min(depth, *n);
    for (std::size_t i = 0; i < k; ++i)
        if (!is_strongly_finite(chain.stage(i)))
            throw Error(Errc::NotStronglyFinite,
                        "stage " + std::to_string(i + 1) + " is not strongly finite");
    for (std::size_t i = 0; i + 1 < k; ++i) require_monic_ic(chain.link(i), "chain link");

    ColimitResult result = colimit(chain, depth, budget);
    if (result.exact)
        for (const Morphism& psi : result.injections)
            if (!backward_surjective(psi))
                throw Error(Errc::InvalidCocone, "colimit injection lost backward surjectivity");
    return result;
}

Chain FraisseState::chain() const {
    return Chain::explicit_chain(stages, links, ChainCategory::iC);
}

namespace {

// Deterministic lazy task stream: stages in creation order, F and G in
// catalog order, e and g in morphism-enumeration order. Materializing all
// tasks per stage is impossible once stages grow, so tasks are produced one
// at a time.
class TaskStream {
public:
    TaskStream(const std::vector<Space>& catalog, const std::vector<Space>& stages)
        : catalog_(catalog), stages_(stages) {}

    struct Task {
        std::size_t stage, f, g_target;
        Morphism e, g;
    };

    std::optional<Task> next() {
        while (true) {
            if (current_e_) {
                if (g_target_ < catalog_.size()) {
                    if (!g_list_) {
                        g_list_ = enumerate_morphisms(catalog_[f_], catalog_[g_target_],
                                                      MorphismFilter::MonicC);
                        g_pos_ = 0;
                    }
                    if (g_pos_ < g_list_->size())
                        return Task{stage_, f_, g_target_, *current_e_, (*g_list_)[g_pos_++]};
                    g_list_.reset();
                    ++g_target_;
                    continue;
                }
                current_e_.reset();
                continue;
            }
            if (e_stream_) {
                current_e_ = e_stream_->next();
                if (current_e_) {
                    g_target_ = 0;
                    g_list_.reset();
                    continue;
                }
                e_stream_.reset();
                ++f_;
            }
            if (f_ >= catalog_.size()) {
                ++stage_;
                f_ = 0;
                if (stage_ >= stages_.size()) return std::nullopt;  // outran the tower
            }
            e_stream_.emplace(catalog_[f_], stages_[stage_], MorphismFilter::MonicC);
        }
    }

private:
    const std::vector<Space>& catalog_;
    const std::vector<Space>& stages_;
    std::size_t stage_ = 0, f_ = 0, g_target_ = 0, g_pos_ = 0;
    std::optional<MorphismEnumerator> e_stream_;
    std::optional<Morphism> current_e_;
    std::optional<std::vector<Morphism>> g_list_;
};

}  // namespace

FraisseState fraisse_build(const Alphabet& alphabet, std::size_t max_objects,
                           std::size_t max_attributes, std::size_t steps, const Budget& budget) {
    FraisseState state;
    state.alphabet = alphabet;
    state.catalog = enumerate_spaces(alphabet, max_objects, max_attributes,
                                     SpaceFilter::StronglyFinite, budget);
    state.stages.push_back(Space(alphabet, {}, {"x"}, {}));

    TaskStream stream(state.catalog, state.stages);
    for (std::size_t step = 1; step <= steps; ++step) {
        auto task = stream.next();
        if (!task) throw Error(Errc::BudgetExceeded, "task stream exhausted before the tower");

        // Lift e to the current top stage through the connecting morphisms.
        Morphism e_top = task->e;
        for (std::size_t i = task->stage; i + 1 < state.stages.size(); ++i)
            e_top = compose(state.links[i], e_top);

        AmalgamationSquare sq = reduce_apex(amalgamate(state.catalog[task->f], e_top, task->g));
        state.stages.push_back(sq.apex);
        state.links.push_back(sq.from_left);

        FraisseResolution res;
        res.step = step;
        res.stage = task->stage;
        res.catalog_f = task->f;
        res.catalog_g = task->g_target;
        res.e = std::move(task->e);
        res.g = std::move(task->g);
        res.e_top = std::move(e_top);
        res.embed = sq.from_right;
        state.log.push_back(std::move(res));
    }
    return state;
}

AlgebroidalReport check_algebroidal_witnesses(const Alphabet& alphabet, std::size_t max_objects,
                                              std::size_t max_attributes, const Budget& budget) {
    AlgebroidalReport report;
    std::vector<Space> catalog = enumerate_spaces(alphabet, max_objects, max_attributes,
                                                  SpaceFilter::StronglyFinite, budget);
    report.catalog_size = catalog.size();

    Space initial(alphabet, {}, {"x"}, {});
    report.weakly_initial_ok = std::all_of(catalog.begin(), catalog.end(), [&](const Space& g) {
        return count_morphisms(initial, g, MorphismFilter::All, budget) >= 1;
    });

    for (const Space& a : catalog)
        for (const Space& b : catalog) {
            report.max_morphism_count = std::max(
                report.max_morphism_count, count_morphisms(a, b, MorphismFilter::All, budget));
            auto link = find_monic_c(a, b, budget);
            if (!link) continue;
            ++report.chain_checks;
            try {
                Chain two = Chain::explicit_chain({a, b}, {*link}, ChainCategory::iC);
                ColimitResult res = colimit(two, 2, budget);
                if (!validate_cocone(two, res.space, res.injections, 2)) ++report.chain_failures;
            } catch (const Error&) {
                ++report.chain_failures;
            }
        }
    return report;
}

}  // namespace chu
