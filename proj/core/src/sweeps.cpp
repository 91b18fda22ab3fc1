#include "chu/sweeps.hpp"

#include <algorithm>
#include <numeric>

namespace chu {
namespace sweeps {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Symbol random_symbol(std::mt19937_64& rng, const Alphabet& alphabet) {
    return static_cast<Symbol>(uniform(rng, 0, alphabet.size() - 1));
}

std::vector<std::string> numbered(const char* prefix, std::size_t from, std::size_t count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        labels.push_back(prefix + std::to_string(from + i));
    return labels;
}

SpaceFilter stage_filter(ChainCategory claim) {
    switch (claim) {
        case ChainCategory::iE: return SpaceFilter::Extensional;
        case ChainCategory::iB: return SpaceFilter::Biextensional;
        default: return SpaceFilter::All;
    }
}

}  // namespace

Space random_space(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_objects,
                   std::size_t max_attributes, SpaceFilter filter) {
    const std::size_t k = alphabet.size();
    while (true) {
        std::size_t na = uniform(rng, 1, max_objects);
        std::size_t nx = uniform(rng, 1, max_attributes);
        // Distinct columns need |X| <= k^|A| (and dually for rows); clamp so
        // rejection can succeed.
        if (filter != SpaceFilter::All) {
            std::uint64_t cap = 1;
            for (std::size_t i = 0; i < na && cap < nx; ++i) cap *= k;
            nx = std::min<std::size_t>(nx, cap);
            if (filter == SpaceFilter::Biextensional) {
                cap = 1;
                for (std::size_t i = 0; i < nx && cap < na; ++i) cap *= k;
                na = std::min<std::size_t>(na, cap);
            }
        }
        for (int tries = 0; tries < 64; ++tries) {
            std::vector<Symbol> matrix(na * nx);
            for (Symbol& s : matrix) s = random_symbol(rng, alphabet);
            Space space(alphabet, numbered("a", 1, na), numbered("x", 1, nx), std::move(matrix));
            if (satisfies(space, filter)) return space;
        }
    }
}

Chain random_chain(std::mt19937_64& rng, ChainCategory claim, std::size_t max_length,
                   std::size_t max_objects, std::size_t max_attributes) {
    const Alphabet alphabet = Alphabet::binary();
    const SpaceFilter filter = stage_filter(claim);
    const std::size_t length = uniform(rng, 2, std::max<std::size_t>(2, max_length));

    std::vector<Space> stages;
    std::vector<Morphism> links;
    stages.push_back(random_space(rng, alphabet, max_objects, max_attributes, filter));

    std::size_t next_object = stages.back().object_count() + 1;
    for (std::size_t i = 1; i < length; ++i) {
        const Space& prev = stages.back();
        const std::size_t nx = prev.attribute_count();
        bool extended = false;
        for (int tries = 0; tries < 128 && !extended; ++tries) {
            std::size_t grow = prev.object_count() < max_objects ? uniform(rng, 0, 1) : 0;
            std::size_t na = prev.object_count() + grow;
            std::size_t nxt;
            std::vector<std::size_t> backward;
            if (claim == ChainCategory::iC) {
                // Backward maps must be surjective: at least nx attributes,
                // the first block a permutation of the old ones.
                nxt = uniform(rng, nx, std::max(nx, max_attributes));
                backward.resize(nxt);
                std::iota(backward.begin(), backward.begin() + nx, 0);
                for (std::size_t j = nx; j < nxt; ++j) backward[j] = uniform(rng, 0, nx - 1);
                std::shuffle(backward.begin(), backward.end(), rng);
            } else {
                nxt = uniform(rng, 1, max_attributes);
                backward.resize(nxt);
                for (std::size_t& b : backward) b = uniform(rng, 0, nx - 1);
            }

            // Old rows are forced by adjointness along the inclusion; new
            // rows are free.
            std::vector<Symbol> matrix(na * nxt);
            for (std::size_t a = 0; a < prev.object_count(); ++a)
                for (std::size_t y = 0; y < nxt; ++y)
                    matrix[a * nxt + y] = prev.at(a, backward[y]);
            for (std::size_t a = prev.object_count(); a < na; ++a)
                for (std::size_t y = 0; y < nxt; ++y)
                    matrix[a * nxt + y] = random_symbol(rng, alphabet);

            std::vector<std::string> objects = prev.objects();
            for (auto& label : numbered("a", next_object, na - prev.object_count()))
                objects.push_back(std::move(label));
            Space stage(alphabet, std::move(objects),
                        numbered(("s" + std::to_string(i + 1) + "x").c_str(), 1, nxt),
                        std::move(matrix));
            if (!satisfies(stage, filter)) continue;

            std::vector<std::size_t> forward(prev.object_count());
            std::iota(forward.begin(), forward.end(), 0);
            links.push_back(Morphism{prev, stage, std::move(forward), std::move(backward)});
            next_object += na - prev.object_count();
            stages.push_back(std::move(stage));
            extended = true;
        }
        if (!extended) {
            // Tight corner (e.g. one attribute, saturated objects): repeat
            // the stage with an identity link, monic in every category.
            links.push_back(identity(prev));
            stages.push_back(prev);
        }
    }
    return Chain::explicit_chain(std::move(stages), std::move(links), claim);
}

}  // namespace sweeps
}  // namespace chu
