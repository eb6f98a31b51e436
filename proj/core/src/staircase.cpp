#include "floercone/staircase.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "floercone/errors.hpp"

namespace floercone {

namespace {

std::string gen_id(int i) { return "x" + std::to_string(i); }

} // namespace

// --- StaircaseSpec ------------------------------------------------------------

int StaircaseSpec::level(int i) const {
    if (i == 0) return 0;
    const int j = i > 0 ? i : -i;
    const int n = steps.at(static_cast<std::size_t>(j) - 1);
    return i > 0 ? n : -n;
}

std::string StaircaseSpec::describe() const {
    std::ostringstream os;
    os << "staircase(";
    for (std::size_t j = 0; j < steps.size(); ++j) os << (j ? "," : "") << steps[j];
    os << ";d=" << d_top << ")";
    return os.str();
}

void require_valid(const StaircaseSpec& spec) {
    int prev = 0;
    for (int n : spec.steps) {
        if (n <= prev)
            throw Error(errkind::invalid_spec,
                        "staircase steps must be strictly increasing positive integers");
        prev = n;
    }
}

std::map<int, int> delta_sequence(const StaircaseSpec& spec) {
    require_valid(spec);
    const int k = spec.k();
    std::map<int, int> delta;
    delta[k] = spec.d_top;
    for (int i = k - 1; i >= -k; --i) {
        const int gap = spec.level(i + 1) - spec.level(i);
        delta[i] = ((k - i) % 2 != 0) ? delta[i + 1] + 2 * gap - 1 : delta[i + 1] + 1;
    }
    return delta;
}

KnotComplex make_staircase(const StaircaseSpec& spec) {
    require_valid(spec);
    const int k = spec.k();
    const std::map<int, int> delta = delta_sequence(spec);

    std::vector<Generator> gens;
    std::map<std::string, std::vector<std::string>> differential;
    std::map<std::string, std::string> duality;
    for (int i = -k; i <= k; ++i) {
        gens.push_back({gen_id(i), spec.level(i), delta.at(i)});
        duality[gen_id(i)] = gen_id(-i);
        if (i != k && (k - i) % 2 == 0) differential[gen_id(i)] = {gen_id(i + 1)};
    }

    KnotComplex b(spec.describe(), std::move(gens), differential, duality);
    b.require_valid();
    return b;
}

// --- recognition ----------------------------------------------------------------

RecognitionResult recognize_staircase(const KnotComplex& b) {
    b.require_valid();

    std::map<int, std::vector<std::size_t>> by_level;
    for (std::size_t i = 0; i < b.dim(); ++i) by_level[b.gen(i).a].push_back(i);

    for (const auto& [level, members] : by_level)
        if (members.size() > 1) {
            std::ostringstream os;
            os << "level multiplicity " << members.size() << " > 1 at level " << level
               << " ('" << b.gen(members[0]).id << "', '" << b.gen(members[1]).id << "')";
            return {std::nullopt, os.str()};
        }

    if (!by_level.count(0)) return {std::nullopt, "missing level 0"};

    const int hom = total_rank(homology_by_degree(b));
    if (hom != 1) {
        std::ostringstream os;
        os << "homology rank " << hom << " != 1";
        return {std::nullopt, os.str()};
    }

    StaircaseSpec spec;
    for (const auto& [level, members] : by_level)
        if (level > 0) spec.steps.push_back(level);
    const int top = by_level.rbegin()->first;
    spec.d_top = b.gen(by_level.at(top).front()).m;

    const std::map<int, int> delta = delta_sequence(spec);
    const int k = spec.k();
    // by_level is symmetric (forced by xi), so the occupied levels are
    // exactly the spec's levels; check the degrees against the recursion
    for (int i = -k; i <= k; ++i) {
        const Generator& g = b.gen(by_level.at(spec.level(i)).front());
        if (g.m != delta.at(i)) {
            std::ostringstream os;
            os << "degree mismatch at level " << spec.level(i) << ": found m=" << g.m
               << ", expected " << delta.at(i) << " ('" << g.id << "')";
            return {std::nullopt, os.str()};
        }
    }

    for (int i = -k; i <= k; ++i) {
        const std::size_t gi = by_level.at(spec.level(i)).front();
        const bool want_arrow = i != k && (k - i) % 2 == 0;
        std::vector<std::size_t> want;
        if (want_arrow) want.push_back(by_level.at(spec.level(i + 1)).front());
        if (b.d_targets(gi) != want) {
            std::ostringstream os;
            os << "differential pattern mismatch at level " << spec.level(i) << " ('"
               << b.gen(gi).id << "'): expected "
               << (want_arrow ? "an arrow to level " + std::to_string(spec.level(i + 1))
                              : std::string("no arrow"));
            return {std::nullopt, os.str()};
        }
    }

    return {spec, ""};
}

// --- Alexander polynomial ----------------------------------------------------------

AlexanderPoly alexander(const KnotComplex& b) {
    b.require_valid();

    std::map<int, int> raw;
    for (const Generator& g : b.generators())
        raw[g.a] += (g.m % 2 == 0) ? 1 : -1;

    int sum = 0;
    for (const auto& [level, c] : raw) sum += c;
    if (sum == 0)
        throw Error(errkind::not_normalizable,
                    "coefficient sum is 0; the global sign cannot be fixed");
    const int sigma = sum > 0 ? 1 : -1;

    AlexanderPoly poly;
    for (const auto& [level, c] : raw)
        if (c != 0) poly.coeffs[level] = sigma * c;
    return poly;
}

// --- random instances ----------------------------------------------------------

namespace {

// mt19937_64 is specified by the standard; bounded draws are taken by
// modulo so the stream is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return lo + static_cast<int>(engine_() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return engine_() & 1u; }

private:
    std::mt19937_64 engine_;
};

constexpr int kDegreeWindow = 2;

} // namespace

KnotComplex random_symmetric_complex(int levels_bound, int dim_bound, std::uint64_t seed) {
    if (levels_bound < 0 || dim_bound < 0)
        throw Error(errkind::out_of_range, "random complex bounds must be nonnegative");

    std::ostringstream name;
    name << "random(levels=" << levels_bound << ",dim=" << dim_bound << ",seed=" << seed
         << ")";

    Rng rng(seed);
    std::vector<Generator> gens;
    std::map<std::string, std::string> duality;

    if (dim_bound > 0) {
        const int max_pairs = levels_bound == 0 ? 0 : dim_bound / 2;
        const int pairs = rng.uniform(0, max_pairs);
        int zeros = rng.uniform(0, dim_bound - 2 * pairs);
        if (pairs == 0 && zeros == 0) zeros = 1;

        for (int j = 0; j < pairs; ++j) {
            const int level = rng.uniform(1, levels_bound);
            const int degree = rng.uniform(-kDegreeWindow, kDegreeWindow);
            const std::string hi = "p" + std::to_string(j) + "h";
            const std::string lo = "p" + std::to_string(j) + "l";
            gens.push_back({hi, level, degree});
            gens.push_back({lo, -level, degree + 2 * level});
            duality[hi] = lo;
            duality[lo] = hi;
        }

        // level-0 generators; xi may swap equal-degree pairs
        std::map<int, std::vector<std::string>> zero_by_degree;
        for (int j = 0; j < zeros; ++j) {
            const int degree = rng.uniform(-kDegreeWindow, kDegreeWindow);
            const std::string id = "z" + std::to_string(j);
            gens.push_back({id, 0, degree});
            zero_by_degree[degree].push_back(id);
        }
        for (const auto& [degree, ids] : zero_by_degree) {
            std::size_t j = 0;
            while (j < ids.size()) {
                if (j + 1 < ids.size() && rng.coin()) {
                    duality[ids[j]] = ids[j + 1];
                    duality[ids[j + 1]] = ids[j];
                    j += 2;
                } else {
                    duality[ids[j]] = ids[j];
                    j += 1;
                }
            }
        }
    }

    std::sort(gens.begin(), gens.end(), [](const Generator& x, const Generator& y) {
        return std::tie(x.a, x.m, x.id) < std::tie(y.a, y.m, y.id);
    });

    // Differential, top level down: d(x) is drawn from the kernel of the
    // already-chosen differential restricted to the admissible targets, so
    // d^2 = 0 holds by construction and every draw succeeds.
    std::vector<gf2::BitVec> chosen(gens.size(), gf2::BitVec(gens.size()));
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return gens[x].a > gens[y].a;
    });

    std::map<std::string, std::vector<std::string>> differential;
    for (std::size_t src : order) {
        std::vector<std::size_t> targets;
        for (std::size_t t = 0; t < gens.size(); ++t)
            if (gens[t].a > gens[src].a && gens[t].m == gens[src].m - 1)
                targets.push_back(t);
        if (targets.empty()) continue;

        gf2::BitMatrix restricted(gens.size(), targets.size());
        for (std::size_t c = 0; c < targets.size(); ++c)
            restricted.set_column(c, chosen[targets[c]]);
        const gf2::Subspace kernel = gf2::kernel_basis(restricted);

        gf2::BitVec coords(kernel.dim());
        for (std::size_t k = 0; k < kernel.dim(); ++k) coords.set(k, rng.coin());
        const gf2::BitVec pick = kernel.combine(coords);

        gf2::BitVec image(gens.size());
        std::vector<std::string>& ids = differential[gens[src].id];
        for (std::size_t c = 0; c < targets.size(); ++c)
            if (pick.get(c)) {
                image.set(targets[c], true);
                ids.push_back(gens[targets[c]].id);
            }
        if (ids.empty()) differential.erase(gens[src].id);
        chosen[src] = image;
    }

    KnotComplex b(name.str(), std::move(gens), differential, duality);
    if (!b.is_valid())
        throw Error(errkind::internal, "random_symmetric_complex produced an invalid complex");
    return b;
}

} // namespace floercone
