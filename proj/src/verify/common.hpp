#pragma once

#include "svt/verify/random_objects.hpp"
#include "svt/verify/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace svt::verify::detail {

using io::json;
using num::RealBall;

// Shared bookkeeping for one suite run.
class Run {
public:
    Run(SuiteReport& rep, const SuiteOptions& opt) : rep_(rep), opt_(opt) {}

    long prec() const { return opt_.prec; }
    long trials(long dflt) const { return opt_.trials >= 0 ? opt_.trials : dflt; }
    std::mt19937_64 rng(long trial, std::uint64_t stream = 0) const {
        return std::mt19937_64(gen::trial_seed(opt_.seed + 0x100000000ULL * stream, static_cast<std::uint64_t>(trial)));
    }

    void fail(long trial, const std::string& check, json detail = json::object()) {
        rep_.failures.push_back(json{{"trial", trial}, {"check", check}, {"detail", std::move(detail)}});
    }
    void expect(bool cond, long trial, const std::string& check, json detail = json::object()) {
        if (!cond) fail(trial, check, std::move(detail));
    }
    // Runs body for every trial; library errors become failures instead of aborting the suite.
    void each(long n, const std::function<void(long, std::mt19937_64&)>& body) {
        for (long t = 0; t < n; ++t) {
            auto g = rng(t);
            ++rep_.trials;
            try {
                body(t, g);
            } catch (const Error& e) {
                fail(t, "exception", json{{"what", e.what()}});
            }
        }
    }
    void skip() { ++rep_.skipped; }

    // Running maximum of a certified upper bound, reported as a decimal string.
    void track_max(const std::string& key, const RealBall& x) {
        auto it = maxima_.find(key);
        if (it == maxima_.end() || x.upper() > it->second.upper()) maxima_[key] = x;
        rep_.stats[key] = x.upper().to_decimal(12, MPFR_RNDU);
    }

    SuiteReport& report() { return rep_; }

private:
    SuiteReport& rep_;
    SuiteOptions opt_;
    std::map<std::string, RealBall> maxima_;
};

inline poly::TranslationParams standard_params() {
    return poly::TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2);
}

void distance_triangle(Run& run);
void distance_lipschitz(Run& run);
void recovery(Run& run);
void dual_basis_suite(Run& run);
void separation(Run& run);
void weil_gap(Run& run);
void translation_height(Run& run);
void variety_separation(Run& run);
void witness(Run& run);
void dyadic(Run& run);
void region(Run& run);
void homogenization(Run& run);
void dirichlet(Run& run);

}  // namespace svt::verify::detail
