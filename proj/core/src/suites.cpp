#include "floercone/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "floercone/errors.hpp"
#include "floercone/serialization.hpp"
#include "floercone/surgery.hpp"

namespace floercone {

const char* suite_name(SuiteKind kind) {
    switch (kind) {
    case SuiteKind::SmallSurgery: return "small-surgery";
    case SuiteKind::Converse: return "converse";
    case SuiteKind::LargeForward: return "large-forward";
    }
    return "?";
}

SuiteKind suite_from_name(const std::string& name) {
    if (name == "small-surgery") return SuiteKind::SmallSurgery;
    if (name == "converse") return SuiteKind::Converse;
    if (name == "large-forward") return SuiteKind::LargeForward;
    throw Error(errkind::usage,
                "unknown suite '" + name +
                    "' (expected small-surgery, converse or large-forward)");
}

std::vector<StaircaseSpec> enumerate_staircases(int max_genus) {
    std::vector<StaircaseSpec> specs;
    if (max_genus < 1) return specs;
    // subsets of {1..max_genus} by bitmask, nonempty, ascending mask order
    for (unsigned mask = 1; mask < (1u << max_genus); ++mask) {
        StaircaseSpec spec;
        for (int j = 1; j <= max_genus; ++j)
            if (mask & (1u << (j - 1))) spec.steps.push_back(j);
        specs.push_back(std::move(spec));
    }
    std::sort(specs.begin(), specs.end(), [](const StaircaseSpec& a, const StaircaseSpec& b) {
        return std::tie(a.steps, a.d_top) < std::tie(b.steps, b.d_top);
    });
    return specs;
}

namespace {

std::vector<KnotComplex> make_instances(const SuiteParams& p) {
    std::vector<KnotComplex> out;
    if (p.random_count > 0) {
        for (int i = 0; i < p.random_count; ++i)
            out.push_back(random_symmetric_complex(p.max_genus, 3 * p.max_genus,
                                                   p.seed + static_cast<std::uint64_t>(i)));
    } else {
        for (const StaircaseSpec& spec : enumerate_staircases(p.max_genus))
            out.push_back(make_staircase(spec));
    }
    return out;
}

bool all_epsilon_vanish(const KnotComplex& b, int g) {
    for (int s = -g + 1; s <= g; ++s)
        if (!surgery::epsilon(b, s).matrix.is_zero()) return false;
    return true;
}

} // namespace

SuiteReport run_suite(const SuiteParams& params) {
    const auto started = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = suite_name(params.suite);

    const auto fail = [&](const KnotComplex& b, const std::string& detail) {
        report.failures.push_back({detail, serialize_complex(b)});
    };

    for (const KnotComplex& b : make_instances(params)) {
        ++report.instances;
        if (b.dim() == 0) {
            ++report.skipped;
            continue;
        }
        const int g = b.genus();

        switch (params.suite) {
        case SuiteKind::SmallSurgery: {
            if (g < 1) {
                ++report.skipped;
                break;
            }
            for (int n = 1; n < 2 * g && n <= params.max_n; ++n) {
                ++report.checks;
                const surgery::SimplicityReport r = surgery::is_simple(b, n);
                if (r.simple || r.hfk_total <= r.hf_total) {
                    std::ostringstream os;
                    os << b.name() << ", n=" << n << ": expected non-simple with strict "
                       << "rank drop, got hfk=" << r.hfk_total << " hf=" << r.hf_total;
                    fail(b, os.str());
                }
            }
            break;
        }
        case SuiteKind::Converse: {
            const RecognitionResult rec = recognize_staircase(b);
            if (!rec.ok()) {
                ++report.skipped;
                break;
            }
            for (int n = std::max(1, 2 * g); n <= params.max_n; ++n) {
                ++report.checks;
                const surgery::SimplicityReport r = surgery::is_simple(b, n);
                if (!r.simple) {
                    std::ostringstream os;
                    os << b.name() << ", n=" << n << ": expected simple, got hfk="
                       << r.hfk_total << " hf=" << r.hf_total;
                    fail(b, os.str());
                    continue;
                }
                for (const auto& [cls, rk] : surgery::hf_ranks(b, n)) {
                    if (rk != 1) {
                        std::ostringstream os;
                        os << b.name() << ", n=" << n << ": Spin^c class [" << cls
                           << "] has hf rank " << rk << ", expected 1";
                        fail(b, os.str());
                    }
                }
            }
            break;
        }
        case SuiteKind::LargeForward: {
            if (total_rank(homology_by_degree(b)) != 1) {
                ++report.skipped;
                break;
            }
            if (!all_epsilon_vanish(b, g)) {
                ++report.skipped;
                break;
            }
            ++report.checks;
            const RecognitionResult rec = recognize_staircase(b);
            if (!rec.ok())
                fail(b, b.name() + ": all epsilon maps vanish but recognition failed: " +
                            rec.reason);
            break;
        }
        }
    }

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

} // namespace floercone
