#include "chu/gallery.hpp"

#include <algorithm>
#include <set>

#include "chu/enumerate.hpp"

namespace chu {
namespace gallery {

namespace {

std::vector<std::string> numeric_labels(std::size_t n, const char* prefix = "") {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::vector<std::string> fresh_labels(std::size_t n, const char* prefix,
                                      const std::vector<std::string>& taken) {
    std::set<std::string> used(taken.begin(), taken.end());
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
        std::string label = prefix + std::to_string(i);
        while (!used.insert(label).second) label += "'";
        out.push_back(std::move(label));
    }
    return out;
}

Space order_space(std::size_t n) {
    std::vector<Symbol> m(n * n);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t x = 1; x <= n; ++x) m[(a - 1) * n + (x - 1)] = a <= x ? 1 : 0;
    return Space(Alphabet::binary(), numeric_labels(n), numeric_labels(n), std::move(m));
}

std::vector<std::size_t> iota_map(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

Chain order_chain(std::size_t window) {
    if (window < 1) throw Error(Errc::InvalidChain, "order chain needs window >= 1");
    auto stage = [window](std::size_t i) {
        if (i >= window) throw Error(Errc::WindowExhausted, "order chain stage past window");
        return order_space(i + 1);
    };
    auto link = [stage](std::size_t i) {
        Morphism m{stage(i), stage(i + 1), iota_map(i + 1), {}};
        m.backward.resize(i + 2);
        for (std::size_t j = 0; j <= i + 1; ++j) m.backward[j] = std::min(j, i);
        return m;
    };
    return Chain::generated(stage, link, ChainCategory::iC, true, "order-chain", window);
}

Chain divisibility_chain(std::size_t window) {
    if (window < 1) throw Error(Errc::InvalidChain, "divisibility chain needs window >= 1");
    auto stage = [window](std::size_t i) {
        if (i >= window) throw Error(Errc::WindowExhausted, "divisibility chain stage past window");
        std::size_t nx = window - i;
        std::vector<Symbol> m(window * nx);
        for (std::size_t a = 1; a <= window; ++a)
            for (std::size_t x = 1; x <= nx; ++x)
                m[(a - 1) * nx + (x - 1)] = (x + i) % a == 0 ? 1 : 0;
        return Space(Alphabet::binary(), numeric_labels(window), numeric_labels(nx),
                     std::move(m));
    };
    auto link = [stage, window](std::size_t i) {
        Morphism m{stage(i), stage(i + 1), iota_map(window), {}};
        m.backward.resize(window - i - 1);
        for (std::size_t j = 0; j + i + 1 < window; ++j) m.backward[j] = j + 1;
        return m;
    };
    return Chain::generated(stage, link, ChainCategory::iE, true, "divisibility-M", window);
}

Chain subset_chain(const std::vector<std::vector<std::string>>& sets) {
    if (sets.empty()) throw Error(Errc::InvalidChain, "subset chain needs at least one set");
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        std::set<std::string> next(sets[i + 1].begin(), sets[i + 1].end());
        bool contained = std::all_of(sets[i].begin(), sets[i].end(),
                                     [&](const std::string& a) { return next.count(a) > 0; });
        if (!contained || sets[i].size() >= sets[i + 1].size())
            throw Error(Errc::NotStrictlyIncreasing, "subset chain sets must strictly increase");
    }
    std::vector<Space> stages;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        std::vector<Symbol> m(sets[j].size() * (j + 1));
        for (std::size_t a = 0; a < sets[j].size(); ++a)
            for (std::size_t i = 0; i <= j; ++i) {
                bool in = std::find(sets[i].begin(), sets[i].end(), sets[j][a]) != sets[i].end();
                m[a * (j + 1) + i] = in ? 1 : 0;
            }
        stages.emplace_back(Alphabet::binary(), sets[j], numeric_labels(j + 1), std::move(m));
    }
    std::vector<Morphism> links;
    for (std::size_t j = 0; j + 1 < sets.size(); ++j) {
        Morphism m{stages[j], stages[j + 1], {}, {}};
        for (const std::string& a : sets[j])
            m.forward.push_back(*stages[j + 1].object_index(a));
        m.backward.resize(j + 2);
        for (std::size_t i = 0; i <= j + 1; ++i) m.backward[i] = std::min(i, j);
        links.push_back(std::move(m));
    }
    return Chain::explicit_chain(std::move(stages), std::move(links), ChainCategory::iC);
}

Space discrete_space(const Alphabet& alphabet, std::size_t n_objects, const Budget& budget) {
    const std::size_t k = alphabet.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n_objects; ++i) {
        count *= k;
        if (count > budget.max_functions)
            throw Error(Errc::BudgetExceeded, "discrete space would exceed the function budget");
    }
    std::vector<std::string> attrs;
    std::vector<std::vector<Symbol>> cols;
    std::vector<Symbol> f(n_objects, 0);
    while (true) {
        std::string label = "x";
        for (Symbol v : f) label += alphabet.symbol(v);
        attrs.push_back(std::move(label));
        cols.push_back(f);
        std::size_t i = n_objects;
        while (i > 0 && f[i - 1] + 1u == k) f[--i] = 0;
        if (i == 0) break;
        ++f[i - 1];
    }
    std::vector<Symbol> m(n_objects * cols.size());
    for (std::size_t a = 0; a < n_objects; ++a)
        for (std::size_t x = 0; x < cols.size(); ++x) m[a * cols.size() + x] = cols[x][a];
    return Space(alphabet, numeric_labels(n_objects, "a"), std::move(attrs), std::move(m));
}

FactorizationDemo repeated_column_demo(const Space& probe, std::size_t y1, std::size_t y2,
                                       std::size_t window) {
    if (y1 >= probe.attribute_count() || y2 >= probe.attribute_count() || y1 == y2 ||
        probe.column(y1) != probe.column(y2))
        throw Error(Errc::InvalidSpace, "demo needs two distinct attributes with equal columns");
    if (window < 3) throw Error(Errc::InvalidChain, "demo needs window >= 3");

    std::vector<std::size_t> rest;  // Y' = Y minus the duplicated pair
    for (std::size_t y = 0; y < probe.attribute_count(); ++y)
        if (y != y1 && y != y2) rest.push_back(y);
    std::vector<std::string> rest_labels;
    for (std::size_t y : rest) rest_labels.push_back(probe.attributes()[y]);
    const std::vector<Symbol> dup = probe.column(y1);

    auto make_stage = [&](std::size_t copies) {
        std::vector<std::string> attrs = rest_labels;
        for (const std::string& n : fresh_labels(copies, "", rest_labels)) attrs.push_back(n);
        std::vector<Symbol> m(probe.object_count() * attrs.size());
        for (std::size_t a = 0; a < probe.object_count(); ++a) {
            for (std::size_t i = 0; i < rest.size(); ++i)
                m[a * attrs.size() + i] = probe.at(a, rest[i]);
            for (std::size_t i = 0; i < copies; ++i)
                m[a * attrs.size() + rest.size() + i] = dup[a];
        }
        return Space(probe.alphabet(), probe.objects(), std::move(attrs), std::move(m));
    };

    std::vector<Space> stages;
    for (std::size_t i = 1; i <= window; ++i) stages.push_back(make_stage(i));
    std::vector<Morphism> links;
    for (std::size_t i = 1; i < window; ++i) {
        // id on Y', id on copies 1..i, and the new copy i+1 folds onto copy 1
        Morphism m{stages[i - 1], stages[i], iota_map(probe.object_count()), {}};
        m.backward.resize(rest.size() + i + 1);
        for (std::size_t j = 0; j < rest.size() + i; ++j) m.backward[j] = j;
        m.backward[rest.size() + i] = rest.size();
        links.push_back(std::move(m));
    }

    FactorizationDemo demo;
    demo.probe = probe;
    demo.window = window;
    demo.apex = stages.back();
    demo.chain = Chain::explicit_chain(stages, std::move(links), ChainCategory::iC);
    for (std::size_t i = 1; i <= window; ++i) {
        Morphism psi{demo.chain.stage(i - 1), demo.apex, iota_map(probe.object_count()), {}};
        psi.backward.resize(rest.size() + window);
        for (std::size_t j = 0; j < rest.size() + window; ++j)
            psi.backward[j] = j < rest.size() + i ? j : rest.size();
        demo.legs.push_back(std::move(psi));
    }
    Morphism phi{probe, demo.apex, iota_map(probe.object_count()), {}};
    phi.backward.resize(rest.size() + window);
    for (std::size_t j = 0; j < rest.size(); ++j) phi.backward[j] = rest[j];
    for (std::size_t i = 1; i <= window; ++i)
        phi.backward[rest.size() + i - 1] = i % 2 == 1 ? y1 : y2;
    demo.phi = std::move(phi);
    return demo;
}

namespace {

// Shared frame of the two non-discreteness demos: probe block top-left, the
// missing column v repeated top-right, a divisibility block bottom-right.
// `extra_rows` (the J block of the biextensional variant) sit between.
struct WitnessFrame {
    std::vector<std::string> objects;          // B + extras + N
    std::vector<std::string> base_attrs;       // apex attributes
    std::vector<std::vector<Symbol>> base_cols;  // their columns
};

FactorizationDemo build_witness_demo(const Space& probe, std::size_t window,
                                     const std::vector<Symbol>& v, const WitnessFrame& frame,
                                     const std::vector<std::size_t>& phi_backward,
                                     ChainCategory claim) {
    const std::size_t nb = probe.object_count();
    const std::size_t n_extra = frame.objects.size() - nb - window;  // J block rows
    const std::size_t n_obj = frame.objects.size();

    auto make_stage = [&](std::size_t i) {  // 0-based stage index
        std::size_t nm = window - i;
        std::vector<std::string> attrs = frame.base_attrs;
        for (const std::string& m : fresh_labels(nm, "m", frame.base_attrs))
            attrs.push_back(m);
        std::vector<Symbol> mat(n_obj * attrs.size());
        for (std::size_t a = 0; a < n_obj; ++a)
            for (std::size_t x = 0; x < frame.base_cols.size(); ++x)
                mat[a * attrs.size() + x] = frame.base_cols[x][a];
        for (std::size_t x = 1; x <= nm; ++x) {
            std::size_t col = frame.base_cols.size() + x - 1;
            for (std::size_t b = 0; b < nb; ++b) mat[b * attrs.size() + col] = v[b];
            for (std::size_t e = 0; e < n_extra; ++e) mat[(nb + e) * attrs.size() + col] = 0;
            for (std::size_t n = 1; n <= window; ++n)
                mat[(nb + n_extra + n - 1) * attrs.size() + col] = (x + i) % n == 0 ? 1 : 0;
        }
        return Space(probe.alphabet(), frame.objects, std::move(attrs), std::move(mat));
    };

    std::vector<Space> stages;
    for (std::size_t i = 0; i < window; ++i) stages.push_back(make_stage(i));
    std::vector<Morphism> links;
    for (std::size_t i = 0; i + 1 < window; ++i) {
        Morphism m{stages[i], stages[i + 1], iota_map(n_obj), {}};
        std::size_t base = frame.base_attrs.size();
        m.backward.resize(base + window - i - 1);
        for (std::size_t j = 0; j < base; ++j) m.backward[j] = j;
        for (std::size_t j = 0; j + i + 1 < window; ++j) m.backward[base + j] = base + j + 1;
        links.push_back(std::move(m));
    }

    FactorizationDemo demo;
    demo.probe = probe;
    demo.window = window;
    std::vector<Symbol> apex_mat(n_obj * frame.base_attrs.size());
    for (std::size_t a = 0; a < n_obj; ++a)
        for (std::size_t x = 0; x < frame.base_cols.size(); ++x)
            apex_mat[a * frame.base_attrs.size() + x] = frame.base_cols[x][a];
    demo.apex = Space(probe.alphabet(), frame.objects, frame.base_attrs, std::move(apex_mat));
    demo.chain = Chain::explicit_chain(std::move(stages), std::move(links), claim);
    for (std::size_t i = 0; i < window; ++i) {
        Morphism psi{demo.chain.stage(i), demo.apex, iota_map(n_obj), {}};
        psi.backward.resize(frame.base_attrs.size());
        for (std::size_t j = 0; j < psi.backward.size(); ++j) psi.backward[j] = j;
        demo.legs.push_back(std::move(psi));
    }
    std::vector<std::size_t> fwd(nb);
    for (std::size_t b = 0; b < nb; ++b) fwd[b] = b;
    demo.phi = Morphism{probe, demo.apex, std::move(fwd), phi_backward};
    return demo;
}

}  // namespace

FactorizationDemo nondiscrete_demo(const Space& probe, std::size_t window) {
    if (!is_extensional(probe))
        throw Error(Errc::InvalidSpace, "demo needs an extensional probe");
    if (window < 1) throw Error(Errc::InvalidChain, "demo needs window >= 1");
    DiscretenessResult d = is_discrete(probe);
    std::vector<Symbol> v = d.discrete ? probe.column(0) : d.missing_function;
    if (d.discrete && probe.attribute_count() == 0)
        throw Error(Errc::InvalidSpace, "demo needs at least one attribute on a discrete probe");

    WitnessFrame frame;
    frame.objects = probe.objects();
    for (const std::string& n : fresh_labels(window, "n", probe.objects()))
        frame.objects.push_back(n);
    frame.base_attrs = probe.attributes();
    for (std::size_t y = 0; y < probe.attribute_count(); ++y) {
        std::vector<Symbol> col = probe.column(y);
        col.resize(frame.objects.size(), 0);  // zeros under the probe block
        frame.base_cols.push_back(std::move(col));
    }
    std::vector<std::size_t> phi_backward(probe.attribute_count());
    for (std::size_t y = 0; y < phi_backward.size(); ++y) phi_backward[y] = y;
    return build_witness_demo(probe, window, v, frame, phi_backward, ChainCategory::iE);
}

FactorizationDemo nondiscrete_demo_biextensional(const Space& probe, std::size_t window) {
    if (!is_biextensional(probe) || probe.attribute_count() != 2)
        throw Error(Errc::InvalidSpace, "demo needs a biextensional probe with two attributes");
    if (window < probe.object_count() + 2)
        throw Error(Errc::InvalidChain, "demo needs window >= |A| + 2");
    DiscretenessResult d = is_discrete(probe);
    std::vector<Symbol> v = d.discrete ? probe.column(0) : d.missing_function;

    const std::size_t nb = probe.object_count();
    WitnessFrame frame;
    frame.objects = probe.objects();
    std::vector<std::string> j_labels = fresh_labels(window, "j", probe.objects());
    for (const std::string& j : j_labels) frame.objects.push_back(j);
    std::vector<std::string> taken = frame.objects;
    for (const std::string& n : fresh_labels(window, "n", taken)) frame.objects.push_back(n);

    // Y' = Y x J, and a bijection pi from the J and N rows onto Y' realized
    // as a unit-matrix block: |Y'| = 2*window = |J| + |N|.
    std::vector<std::size_t> phi_backward;
    for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t j = 0; j < window; ++j) {
            frame.base_attrs.push_back("(" + probe.attributes()[y] + "," + j_labels[j] + ")");
            std::vector<Symbol> col(frame.objects.size(), 0);
            for (std::size_t b = 0; b < nb; ++b) col[b] = probe.at(b, y);
            col[nb + y * window + j] = 1;  // pi(row) = this column, in order
            frame.base_cols.push_back(std::move(col));
            phi_backward.push_back(y);
        }
    return build_witness_demo(probe, window, v, frame, phi_backward, ChainCategory::iB);
}

NoColimitReport demo_no_colimit_in_iC(std::size_t window) {
    if (window < 2) throw Error(Errc::InvalidChain, "demo needs window >= 2");
    const std::size_t w = window;
    Chain ch = normalize_to_inclusions(order_chain(w), w);

    Space c = order_space(w);
    std::vector<std::string> cp_attrs = numeric_labels(w);
    cp_attrs.push_back("t");
    std::vector<Symbol> cp_mat(w * (w + 1));
    for (std::size_t a = 1; a <= w; ++a) {
        for (std::size_t x = 1; x <= w; ++x) cp_mat[(a - 1) * (w + 1) + (x - 1)] = a <= x ? 1 : 0;
        cp_mat[(a - 1) * (w + 1) + w] = 1;
    }
    Space cprime(Alphabet::binary(), numeric_labels(w), std::move(cp_attrs), std::move(cp_mat));

    std::vector<Morphism> legs_c, legs_cp;
    for (std::size_t i = 0; i < w; ++i) {
        Morphism to_c{ch.stage(i), c, iota_map(i + 1), {}};
        to_c.backward.resize(w);
        for (std::size_t j = 0; j < w; ++j) to_c.backward[j] = std::min(j, i);
        legs_c.push_back(std::move(to_c));
        Morphism to_cp{ch.stage(i), cprime, iota_map(i + 1), {}};
        to_cp.backward.resize(w + 1);
        for (std::size_t j = 0; j < w; ++j) to_cp.backward[j] = std::min(j, i);
        to_cp.backward[w] = i;  // the all-ones attribute pulls back to the top
        legs_cp.push_back(std::move(to_cp));
    }

    NoColimitReport report;
    report.window = w;
    report.cocones_valid =
        validate_cocone(ch, c, legs_c, w) && validate_cocone(ch, cprime, legs_cp, w);

    auto commutes = [&](const Morphism& m) {
        for (std::size_t i = 0; i < w; ++i) {
            Morphism composite = compose(m, legs_cp[i]);
            if (composite.forward != legs_c[i].forward ||
                composite.backward != legs_c[i].backward)
                return false;
        }
        return true;
    };
    for_each_morphism(cprime, c, MorphismFilter::All, [&](const Morphism& m) {
        if (commutes(m)) {
            ++report.commuting_count;
            if (forward_injective(m) && backward_surjective(m)) ++report.commuting_monic_count;
        }
        return true;
    });
    report.obstruction_confirmed =
        report.cocones_valid && report.commuting_count > 0 && report.commuting_monic_count == 0;

    Morphism mediator{cprime, c, iota_map(w), {}};
    mediator.backward.resize(w);
    for (std::size_t j = 0; j < w; ++j) mediator.backward[j] = j;
    report.ie_mediator_exists =
        validate(mediator) && forward_injective(mediator) && commutes(mediator);
    return report;
}

Chain make_rule_chain(const std::string& id, const std::map<std::string, std::string>& params) {
    auto window_param = [&]() {
        auto it = params.find("window");
        if (it == params.end()) throw Error(Errc::ParseError, "rule needs a window parameter");
        return static_cast<std::size_t>(std::stoul(it->second));
    };
    if (id == "order-chain") return order_chain(window_param());
    if (id == "divisibility-M") return divisibility_chain(window_param());
    if (id == "subset-chain") {
        auto it = params.find("sets");
        if (it == params.end()) throw Error(Errc::ParseError, "subset-chain needs a sets parameter");
        std::vector<std::vector<std::string>> sets;
        std::string cur;
        sets.emplace_back();
        for (char ch : it->second + ";") {
            if (ch == ',' || ch == ';') {
                if (!cur.empty()) sets.back().push_back(cur);
                cur.clear();
                if (ch == ';') sets.emplace_back();
            } else {
                cur += ch;
            }
        }
        while (!sets.empty() && sets.back().empty()) sets.pop_back();
        return subset_chain(sets);
    }
    throw Error(Errc::ParseError, "unknown chain rule: " + id);
}

}  // namespace gallery
}  // namespace chu
