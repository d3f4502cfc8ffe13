#include "common.hpp"

namespace svt::verify {

namespace {

struct Entry {
    std::string name;
    long trials;
    void (*run)(detail::Run&);
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {"lemma2.2", 10000, detail::distance_triangle},
        {"lemma2.3", 10000, detail::distance_lipschitz},
        {"lemma3.1", 500, detail::recovery},
        {"prop3.3", 200, detail::dual_basis_suite},
        {"prop3.5", 20, detail::separation},
        {"gelfond", 100, detail::weil_gap},
        {"lemma4.1", 50, detail::translation_height},
        {"prop4.3", 100, detail::variety_separation},
        {"lemma4.4", 30, detail::witness},
        {"prop5.4", 1000, detail::dyadic},
        {"region", 10000, detail::region},
        {"homogenization", 200, detail::homogenization},
        {"dirichlet", 0, detail::dirichlet},
    };
    return r;
}

const Entry* find(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace

io::json SuiteReport::to_json() const {
    return io::json{{"suite", suite},   {"seed", seed},         {"trials", trials},
                    {"skipped", skipped}, {"failures", failures}, {"constants", constants},
                    {"stats", stats},   {"ok", ok()}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

bool has_suite(const std::string& name) { return find(name) != nullptr; }

long default_trials(const std::string& name) {
    const Entry* e = find(name);
    if (!e) throw PreconditionFailed("unknown suite " + name);
    return e->trials;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    const Entry* e = find(name);
    if (!e) throw PreconditionFailed("unknown suite " + name);
    if (opt.prec < 64) throw PreconditionFailed("precision below 64 bits");
    SuiteReport rep;
    rep.suite = name;
    rep.seed = opt.seed;
    detail::Run run(rep, opt);
    e->run(run);
    return rep;
}

}  // namespace svt::verify
