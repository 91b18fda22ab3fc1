// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures. An optional argument restricts the run to one criterion.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "chu/canonical.hpp"
#include "chu/enumerate.hpp"
#include "chu/finobj.hpp"
#include "chu/gallery.hpp"
#include "chu/io.hpp"
#include "chu/monic.hpp"
#include "chu/suites.hpp"
#include "chu/universal.hpp"

using namespace chu;

namespace {

Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}

struct Gate {
    int failures = 0;

    void report(int n, const char* what, bool ok, const std::string& detail = {}) {
        if (!ok) ++failures;
        std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }

    void suite(int n, const char* what, const suites::SuiteReport& r, double limit_s,
               double elapsed_s) {
        std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) +
                             " failures, " + std::to_string(elapsed_s) + "s";
        if (!r.notes.empty()) detail += "; " + r.notes.front();
        report(n, what, r.passed() && elapsed_s <= limit_s, detail);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1(Gate& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = suites::characterization_agreement(Alphabet::binary(), 2, 2, 2, 3);
    g.suite(1, "monic characterizations agree with definitional witnesses", r, 300,
            seconds_since(t0));
}

void criterion_2(Gate& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = suites::determination_sweep(Alphabet::binary(), 2, 2);
    g.suite(2, "morphism components determine each other", r, 120, seconds_since(t0));
}

void criterion_3(Gate& g) {
    Space c = make({"a"}, {"x1", "x2"}, {0, 1});
    Space c2 = make({"b"}, {"y"}, {0});
    bool ok = count_morphisms(c, c2) == 1;
    Morphism m = enumerate_morphisms(c, c2).front();
    ok = ok && is_monic(m, Category::B).monic && is_monic(m, Category::E).monic;
    MonicVerdict in_c = is_monic(m, Category::C);
    ok = ok && !in_c.monic && in_c.witness && witness_refutes(m, Category::C, *in_c.witness);
    g.report(3, "the constrained one-morphism pair is monic in E and B only", ok);
}

void criterion_4(Gate& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = suites::mediator_sweep(0xC4, 200, 4, 3, 4, 3, 4);
    g.suite(4, "random extensional chains have unique mediators", r, 600, seconds_since(t0));
}

void criterion_5(Gate& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = suites::biextensional_colimit_sweep(0xC5, 100, 4, 3, 3);
    g.suite(5, "random biextensional chains have biextensional colimits", r, 600,
            seconds_since(t0));
}

void criterion_6(Gate& g) {
    bool ok = true;
    std::string detail;
    for (std::size_t w : {3, 4, 5}) {
        ColimitResult res = colimit(gallery::order_chain(w), w);
        if (res.space.attribute_count() != w) {
            ok = false;
            detail = "thread count != window at W=" + std::to_string(w);
            break;
        }
        gallery::NoColimitReport r = gallery::demo_no_colimit_in_iC(w);
        if (!(r.cocones_valid && r.obstruction_confirmed && r.commuting_monic_count == 0 &&
              r.ie_mediator_exists)) {
            ok = false;
            detail = "obstruction not reproduced at W=" + std::to_string(w);
            break;
        }
    }
    g.report(6, "ordered chains obstruct colimits under surjective backwards", ok, detail);
}

void criterion_7(Gate& g) {
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const char* what) {
        if (ok && !cond) {
            ok = false;
            detail = what;
        }
    };

    expect(classify_iC(make({"*"}, {"x0", "x1"}, {0, 1})), "two-column point not iC-finite");
    expect(classify_iE(make({"*"}, {"x0", "x1"}, {0, 1})), "two-column point not iE-finite");
    expect(!classify_iC(make({"*"}, {"1", "2"}, {0, 0})), "repeated-column point iC-finite");
    Space after = make({"1", "2"}, {"c"}, {1, 1});
    expect(classify_iC(after) && !classify_iE(after), "constant-column pair misclassified");
    expect(classify_iB(make({"a"}, {}, {})), "bare point not iB-finite");

    // All discrete extensional spaces of equal object count are isomorphic.
    std::vector<Space> ext = enumerate_spaces(Alphabet::binary(), 3, 8,
                                              SpaceFilter::Extensional);
    std::vector<Space> discrete;
    for (const Space& s : ext) {
        if (attribute_bound(s) != true) expect(false, "attribute bound violated");
        if (classify_iE(s)) discrete.push_back(s);
    }
    expect(!discrete.empty(), "no discrete spaces enumerated");
    for (const Space& s : discrete)
        for (const Space& t : discrete)
            if (s.object_count() == t.object_count() && !find_isomorphism(s, t))
                expect(false, "equal-size discrete spaces not isomorphic");

    g.report(7, "finiteness classifiers match the fixture verdicts", ok, detail);
}

void criterion_8(Gate& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = suites::amalgamation_sweep(Alphabet::binary(), 2, 2, 10000, 0xC8);
    g.suite(8, "every catalog cospan amalgamates", r, 600, seconds_since(t0));
}

void criterion_9(Gate& g) {
    bool ok = true;
    std::string detail;
    FraisseState st = fraisse_build(Alphabet::binary(), 2, 3, 200);

    // (a) every catalog object acquires a verified embedding into the tower.
    std::set<std::size_t> embedded;
    for (const FraisseResolution& res : st.log) {
        const Morphism& e = res.embed;
        bool good = e.source == st.catalog[res.catalog_g] && e.target == st.stages[res.step] &&
                    validate(e) && forward_injective(e) && backward_surjective(e);
        if (!good) {
            ok = false;
            detail = "logged embedding fails re-validation at step " + std::to_string(res.step);
        }
        embedded.insert(res.catalog_g);
    }
    if (ok && embedded.size() != st.catalog.size()) {
        ok = false;
        detail = "only " + std::to_string(embedded.size()) + " of " +
                 std::to_string(st.catalog.size()) + " catalog objects embedded";
    }

    // (b) one-point extension: the resolved square commutes.
    for (const FraisseResolution& res : st.log) {
        Morphism via_tower = compose(st.links[res.step - 1], res.e_top);
        Morphism via_g = compose(res.embed, res.g);
        if (via_tower.forward != via_g.forward || via_tower.backward != via_g.backward) {
            ok = false;
            detail = "resolution square does not commute at step " + std::to_string(res.step);
            break;
        }
    }

    // (c) the tower is a chain of strongly finite spaces with monic links.
    try {
        validate(st.chain(), st.stages.size());
    } catch (const Error& e) {
        ok = false;
        detail = std::string("stage chain invalid: ") + e.what();
    }
    for (std::size_t i = 1; ok && i < st.stages.size(); ++i)
        if (!is_strongly_finite(st.stages[i])) {
            ok = false;
            detail = "stage " + std::to_string(i) + " not strongly finite";
        }

    g.report(9, "the amalgamation tower embeds the whole catalog", ok, detail);
}

void criterion_10(Gate& g) {
    std::vector<std::vector<std::string>> sets_a = {
        {"a"}, {"a", "b"}, {"a", "b", "c"}, {"a", "b", "c", "d"}};
    std::vector<std::vector<std::string>> sets_b = {
        {"a"}, {"a", "b"}, {"a", "b", "c", "d"}, {"a", "b", "c", "d", "e"}};
    ColimitResult ra = colimit(gallery::subset_chain(sets_a), 4);
    ColimitResult rb = colimit(gallery::subset_chain(sets_b), 4);

    bool ok = !find_isomorphism(ra.space, rb.space).has_value();
    std::string detail = ok ? "" : "approximants unexpectedly isomorphic";

    auto supports_match = [](const Space& s, const std::vector<std::vector<std::string>>& sets) {
        if (s.attribute_count() != sets.size()) return false;
        for (std::size_t x = 0; x < sets.size(); ++x) {
            std::set<std::string> support;
            for (std::size_t a = 0; a < s.object_count(); ++a)
                if (s.at(a, x) == 1) support.insert(s.objects()[a]);
            if (support != std::set<std::string>(sets[x].begin(), sets[x].end())) return false;
        }
        return true;
    };
    if (ok && !(supports_match(ra.space, sets_a) && supports_match(rb.space, sets_b))) {
        ok = false;
        detail = "column supports do not recover the generating sets";
    }
    g.report(10, "subset chains are separated by their approximants", ok, detail);
}

void criterion_11(Gate& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = suites::roundtrip_sweep(Alphabet::binary(), 2, 2);
    g.suite(11, "parse after emit is the identity, text and JSON", r, 120, seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    Gate g;
    void (*criteria[])(Gate&) = {criterion_1, criterion_2, criterion_3, criterion_4,
                                 criterion_5, criterion_6, criterion_7, criterion_8,
                                 criterion_9, criterion_10, criterion_11};
    for (int n = 1; n <= 11; ++n) {
        if (only && n != only) continue;
        try {
            criteria[n - 1](g);
        } catch (const std::exception& e) {
            g.report(n, "criterion body threw", false, e.what());
        }
    }
    return g.failures;
}
