#include "pp7/search.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "pp7/equiv.hpp"
#include "pp7/hermite.hpp"

namespace pp7 {

FieldSummary summarize(const Field& F)
{
    return {F.p(), F.r(), F.q(), std::vector<int>(F.modulus().begin(), F.modulus().end()), F.generator().code()};
}

namespace {

struct WorkerResult {
    std::map<NormalizedSeptic, std::int64_t> classes;
    std::int64_t candidates = 0;
    std::int64_t violations = 0;
};

// Necessary conditions a candidate must meet before the value-set test.
class Prefilter {
public:
    explicit Prefilter(const Field& F) : field_(&F)
    {
        if (F.p() != 7)
            filter_.emplace(F);
    }

    bool operator()(const NormalizedSeptic& s) const
    {
        if (filter_)
            return (*filter_)(s);
        return s[5].is_zero() || p7_a1_relation(*field_, s);
    }

private:
    const Field* field_;
    std::optional<IdentityFilter> filter_;
};

void scan(const CandidateSpace& space, const Prefilter& prefilter, bool audit,
          const std::vector<CandidatePrefix>& prefixes, std::size_t first, std::size_t stride, WorkerResult& out)
{
    const Field& F = space.field();
    SepticPPTester is_pp(F);
    for (std::size_t i = first; i < prefixes.size(); i += stride) {
        space.visit(prefixes[i], [&](const NormalizedSeptic& s) {
            ++out.candidates;
            if (audit) {
                if (!is_pp(s))
                    return;
                if (!prefilter(s)) {
                    ++out.violations;
                    return;
                }
            } else if (!prefilter(s) || !is_pp(s)) {
                return;
            }
            ++out.classes[canonical(F, s)];
        });
    }
}

} // namespace

ClassificationReport classify(const Field& F, const SearchOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const CandidateSpace space(F, !options.audit_filters);

    ClassificationReport report;
    report.field = summarize(F);
    if (space.empty()) {
        report.note = space.empty_reason();
        return report;
    }

    const Prefilter prefilter(F);
    const auto prefixes = space.prefixes();
    const auto jobs = static_cast<std::size_t>(std::clamp<std::size_t>(
        static_cast<std::size_t>(std::max(options.jobs, 1)), 1, std::max<std::size_t>(prefixes.size(), 1)));

    // Static strided split of the (a5, a4) prefixes; every worker owns its results.
    std::vector<WorkerResult> results(jobs);
    if (jobs == 1) {
        scan(space, prefilter, options.audit_filters, prefixes, 0, 1, results[0]);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] { scan(space, prefilter, options.audit_filters, prefixes, w, jobs, results[w]); });
    }

    std::map<NormalizedSeptic, std::int64_t> merged;
    for (const auto& r : results) {
        for (const auto& [key, count] : r.classes)
            merged[key] += count;
        report.candidates += r.candidates;
        report.filter_violations += r.violations;
    }

    const auto entries = catalog(F);
    for (const auto& [key, count] : merged) {
        PPClassRecord rec;
        rec.q = F.q();
        rec.coeffs = key;
        rec.witness_count = count;
        if (auto e = is_exceptional(F, entries, key)) {
            rec.is_exceptional = true;
            rec.family = e->family;
        } else {
            ++report.nonexceptional_count;
        }
        report.records.push_back(rec);
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

ClassificationReport verify_paper(const Field& F, int jobs)
{
    auto report = classify(F, {jobs, false});
    report.golden_diff = diff_against_golden(F, report);
    return report;
}

} // namespace pp7
