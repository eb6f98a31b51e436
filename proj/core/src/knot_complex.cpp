#include "floercone/knot_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "floercone/errors.hpp"

namespace floercone {

namespace {

std::string quoted(const std::string& id) { return "'" + id + "'"; }

} // namespace

int total_rank(const RankReport& report) {
    int total = 0;
    for (const auto& [index, r] : report) total += r;
    return total;
}

// --- KnotComplex -------------------------------------------------------------

KnotComplex::KnotComplex(std::string name, std::vector<Generator> generators,
                         const std::map<std::string, std::vector<std::string>>& differential,
                         const std::map<std::string, std::string>& duality)
    : name_(std::move(name)), gens_(std::move(generators)) {
    std::sort(gens_.begin(), gens_.end(), [](const Generator& x, const Generator& y) {
        return std::tie(x.a, x.m, x.id) < std::tie(y.a, y.m, y.id);
    });

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!index.emplace(gens_[i].id, i).second)
            throw Error(errkind::schema, "duplicate generator id " + quoted(gens_[i].id));
    }
    const auto lookup = [&](const std::string& id, const char* where) {
        auto it = index.find(id);
        if (it == index.end())
            throw Error(errkind::schema,
                        std::string(where) + " references unknown generator " + quoted(id));
        return it->second;
    };

    d_.assign(gens_.size(), {});
    for (const auto& [src, targets] : differential) {
        const std::size_t j = lookup(src, "differential");
        std::set<std::size_t> seen;
        for (const std::string& dst : targets) {
            if (!seen.insert(lookup(dst, "differential")).second)
                throw Error(errkind::schema, "differential of " + quoted(src) +
                                                 " lists " + quoted(dst) + " twice");
        }
        d_[j].assign(seen.begin(), seen.end());
    }

    xi_.assign(gens_.size(), npos);
    for (const auto& [src, dst] : duality)
        xi_[lookup(src, "duality")] = lookup(dst, "duality");

    dmat_ = gf2::BitMatrix(gens_.size(), gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j)
        for (std::size_t i : d_[j]) dmat_.set(i, j, true);

    check_invariants();
}

void KnotComplex::check_invariants() {
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        for (std::size_t i : d_[j]) {
            if (gens_[i].a <= gens_[j].a) {
                std::ostringstream os;
                os << "d(" << quoted(gens_[j].id) << ") -> " << quoted(gens_[i].id)
                   << ": Alexander level must strictly increase (a=" << gens_[j].a
                   << " -> a=" << gens_[i].a << ")";
                violations_.push_back(os.str());
            }
            if (gens_[i].m != gens_[j].m - 1) {
                std::ostringstream os;
                os << "d(" << quoted(gens_[j].id) << ") -> " << quoted(gens_[i].id)
                   << ": homological degree must drop by exactly 1 (m=" << gens_[j].m
                   << " -> m=" << gens_[i].m << ")";
                violations_.push_back(os.str());
            }
        }
    }

    const gf2::BitMatrix dd = dmat_.multiply(dmat_);
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        const auto hit = dd.column(j).first_set();
        if (hit) {
            std::ostringstream os;
            os << "d^2(" << quoted(gens_[j].id) << ") != 0 (hits "
               << quoted(gens_[*hit].id) << ")";
            violations_.push_back(os.str());
        }
    }

    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (xi_[i] == npos) {
            violations_.push_back("duality undefined for " + quoted(gens_[i].id));
            continue;
        }
        const Generator& g = gens_[i];
        const Generator& p = gens_[xi_[i]];
        if (xi_[xi_[i]] != i) {
            std::ostringstream os;
            os << "xi is not an involution at " << quoted(g.id) << ": xi(xi("
               << quoted(g.id) << ")) = "
               << (xi_[xi_[i]] == npos ? "undefined" : quoted(gens_[xi_[xi_[i]]].id));
            violations_.push_back(os.str());
        }
        if (p.a != -g.a) {
            std::ostringstream os;
            os << "a(xi(" << quoted(g.id) << ")) must be " << -g.a << ", found " << p.a
               << " (xi(" << quoted(g.id) << ") = " << quoted(p.id) << ")";
            violations_.push_back(os.str());
        }
        if (p.m != g.m + 2 * g.a) {
            std::ostringstream os;
            os << "m(xi(" << quoted(g.id) << ")) must be m(" << quoted(g.id) << ") + 2*a("
               << quoted(g.id) << ") = " << g.m + 2 * g.a << ", found " << p.m << " (xi("
               << quoted(g.id) << ") = " << quoted(p.id) << ")";
            violations_.push_back(os.str());
        }
    }
}

std::size_t KnotComplex::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].id == id) return i;
    throw Error(errkind::schema, "unknown generator id " + quoted(id));
}

void KnotComplex::require_valid() const {
    if (violations_.empty()) return;
    std::ostringstream os;
    os << "complex '" << name_ << "' fails validation:";
    for (const std::string& v : violations_) os << "\n  - " << v;
    throw Error(errkind::validation, os.str());
}

int KnotComplex::genus() const {
    require_valid();
    if (gens_.empty()) throw Error(errkind::empty_complex, "genus of the empty complex");
    int g = gens_.front().a;
    for (const Generator& x : gens_) g = std::max(g, x.a);
    return g;
}

int KnotComplex::min_level() const {
    require_valid();
    if (gens_.empty()) throw Error(errkind::empty_complex, "min level of the empty complex");
    int lo = gens_.front().a;
    for (const Generator& x : gens_) lo = std::min(lo, x.a);
    return lo;
}

int KnotComplex::d_invariant() const {
    require_valid();
    const RankReport h = homology_by_degree(*this);
    const int total = total_rank(h);
    if (total != 1) {
        std::ostringstream os;
        os << "total homology rank is " << total
           << ", not 1: not a knot in a homology-sphere L-space";
        throw Error(errkind::not_rank_one, os.str());
    }
    for (const auto& [degree, r] : h)
        if (r == 1) return degree;
    throw Error(errkind::internal, "d_invariant: rank-1 degree not found");
}

std::map<std::string, std::vector<std::string>> KnotComplex::differential_by_id() const {
    std::map<std::string, std::vector<std::string>> out;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (d_[j].empty()) continue;
        std::vector<std::string>& t = out[gens_[j].id];
        for (std::size_t i : d_[j]) t.push_back(gens_[i].id);
    }
    return out;
}

std::map<std::string, std::string> KnotComplex::duality_by_id() const {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (xi_[i] != npos) out[gens_[i].id] = gens_[xi_[i]].id;
    return out;
}

// --- slices -------------------------------------------------------------------

const char* slice_kind_name(SliceKind kind) {
    switch (kind) {
    case SliceKind::GE: return "GE";
    case SliceKind::GT: return "GT";
    case SliceKind::LE: return "LE";
    case SliceKind::LT: return "LT";
    case SliceKind::AT: return "AT";
    }
    return "?";
}

namespace {

bool in_slice(SliceKind kind, int level, int a) {
    switch (kind) {
    case SliceKind::GE: return a >= level;
    case SliceKind::GT: return a > level;
    case SliceKind::LE: return a <= level;
    case SliceKind::LT: return a < level;
    case SliceKind::AT: return a == level;
    }
    return false;
}

} // namespace

SliceComplex::SliceComplex(const KnotComplex& parent, SliceKind kind, int level)
    : kind_(kind), level_(level), parent_dim_(parent.dim()) {
    parent.require_valid();
    for (std::size_t i = 0; i < parent.dim(); ++i)
        if (in_slice(kind, level, parent.gen(i).a)) {
            members_.push_back(i);
            gens_.push_back(parent.gen(i));
        }

    std::vector<std::size_t> member_index(parent.dim(), KnotComplex::npos);
    for (std::size_t k = 0; k < members_.size(); ++k) member_index[members_[k]] = k;

    dmat_ = gf2::BitMatrix(members_.size(), members_.size());
    for (std::size_t k = 0; k < members_.size(); ++k)
        for (std::size_t t : parent.d_targets(members_[k]))
            if (member_index[t] != KnotComplex::npos) dmat_.set(member_index[t], k, true);
}

const Generator& SliceComplex::gen(std::size_t i) const { return gens_.at(i); }

gf2::BitVec SliceComplex::embed(const gf2::BitVec& v) const {
    gf2::BitVec out(parent_dim_);
    for (std::size_t k = 0; k < members_.size(); ++k)
        if (v.get(k)) out.set(members_[k], true);
    return out;
}

gf2::BitVec SliceComplex::project(const gf2::BitVec& parent_vec, bool must_be_supported) const {
    gf2::BitVec out(members_.size());
    gf2::BitVec seen(parent_vec.size());
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (parent_vec.get(members_[k])) {
            out.set(k, true);
            seen.set(members_[k], true);
        }
    }
    if (must_be_supported && !(seen == parent_vec))
        throw Error(errkind::internal, "slice projection drops a required component");
    return out;
}

SliceComplex slice(const KnotComplex& b, SliceKind kind, int s) {
    return SliceComplex(b, kind, s);
}

// --- homology by degree ---------------------------------------------------------

namespace {

// The differential drops the degree by 1, so homology splits by degree:
// rank_m = dim_m - rank(d|_m) - rank(d|_{m+1}).
RankReport graded_homology(const std::vector<Generator>& gens, const gf2::BitMatrix& d) {
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < gens.size(); ++i) by_degree[gens[i].m].push_back(i);

    const auto block = [&](int from_degree) {
        const auto src = by_degree.find(from_degree);
        const auto dst = by_degree.find(from_degree - 1);
        const std::size_t nsrc = src == by_degree.end() ? 0 : src->second.size();
        const std::size_t ndst = dst == by_degree.end() ? 0 : dst->second.size();
        gf2::BitMatrix m(ndst, nsrc);
        for (std::size_t c = 0; c < nsrc; ++c)
            for (std::size_t r = 0; r < ndst; ++r)
                if (d.get(dst->second[r], src->second[c])) m.set(r, c, true);
        return m;
    };

    RankReport out;
    for (const auto& [degree, indices] : by_degree) {
        const std::size_t r_out = gf2::rank(block(degree));
        const std::size_t r_in = gf2::rank(block(degree + 1));
        const int h = static_cast<int>(indices.size() - r_out - r_in);
        if (h != 0) out[degree] = h;
    }
    return out;
}

} // namespace

RankReport homology_by_degree(const KnotComplex& b) {
    b.require_valid();
    return graded_homology(b.generators(), b.differential_matrix());
}

RankReport homology_by_degree(const SliceComplex& c) {
    std::vector<Generator> gens;
    gens.reserve(c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) gens.push_back(c.gen(i));
    return graded_homology(gens, c.differential());
}

// --- structure maps --------------------------------------------------------------

gf2::BitMatrix tau(const KnotComplex& b, int s) {
    b.require_valid();
    const SliceComplex lt = slice(b, SliceKind::LT, s);
    const SliceComplex at = slice(b, SliceKind::AT, s);
    const gf2::HomologyBasis h(lt.differential());
    const gf2::BitMatrix& d = b.differential_matrix();

    // well-definedness: boundaries of B{<s} have no level-s component in d
    for (const gf2::BitVec& bnd : h.boundaries().basis())
        if (!at.project(d.apply(lt.embed(bnd)), false).is_zero())
            throw Error(errkind::internal, "tau: not well defined on homology");

    gf2::BitMatrix out(at.dim(), h.rank());
    for (std::size_t k = 0; k < h.rank(); ++k)
        out.set_column(k, at.project(d.apply(lt.embed(h.representative(k))), false));
    return out;
}

gf2::BitMatrix q_map(const KnotComplex& b, int s) {
    b.require_valid();
    const SliceComplex at = slice(b, SliceKind::AT, s);
    const SliceComplex le = slice(b, SliceKind::LE, s);
    const gf2::HomologyBasis h(le.differential());

    gf2::BitMatrix out(h.rank(), at.dim());
    for (std::size_t k = 0; k < at.dim(); ++k) {
        const gf2::BitVec v = le.project(at.embed(gf2::BitVec::unit(at.dim(), k)), true);
        if (!le.differential().apply(v).is_zero())
            throw Error(errkind::internal, "q_map: level generator is not a cycle");
        out.set_column(k, h.class_of(v));
    }
    return out;
}

gf2::BitMatrix p_map(const KnotComplex& b, int s) {
    b.require_valid();
    const SliceComplex le = slice(b, SliceKind::LE, s);
    const SliceComplex gt = slice(b, SliceKind::GT, s);
    const gf2::HomologyBasis hle(le.differential());
    const gf2::HomologyBasis hgt(gt.differential());
    const gf2::BitMatrix& d = b.differential_matrix();

    gf2::BitMatrix out(hgt.rank(), hle.rank());
    for (std::size_t k = 0; k < hle.rank(); ++k) {
        // a cycle of the quotient complex B{<=s} maps under d into B{>s}
        const gf2::BitVec w = d.apply(le.embed(hle.representative(k)));
        const gf2::BitVec wgt = gt.project(w, true);
        if (!gt.differential().apply(wgt).is_zero())
            throw Error(errkind::internal, "p_map: image is not a cycle");
        out.set_column(k, hgt.class_of(wgt));
    }
    return out;
}

gf2::BitMatrix iota(const KnotComplex& b, int s) {
    b.require_valid();
    const SliceComplex ge = slice(b, SliceKind::GE, s);
    const gf2::HomologyBasis hge(ge.differential());
    const gf2::HomologyBasis hb(b.differential_matrix());

    gf2::BitMatrix out(hb.rank(), hge.rank());
    for (std::size_t k = 0; k < hge.rank(); ++k)
        out.set_column(k, hb.class_of(ge.embed(hge.representative(k))));
    return out;
}

gf2::BitMatrix xi_level_matrix(const KnotComplex& b, int s) {
    b.require_valid();
    const SliceComplex at = slice(b, SliceKind::AT, s);
    const SliceComplex neg = slice(b, SliceKind::AT, -s);

    std::vector<std::size_t> neg_index(b.dim(), KnotComplex::npos);
    for (std::size_t k = 0; k < neg.dim(); ++k) neg_index[neg.members()[k]] = k;

    gf2::BitMatrix out(neg.dim(), at.dim());
    for (std::size_t k = 0; k < at.dim(); ++k) {
        const std::size_t partner = b.xi(at.members()[k]);
        if (partner == KnotComplex::npos || neg_index[partner] == KnotComplex::npos)
            throw Error(errkind::internal, "xi does not map the level as required");
        out.set(neg_index[partner], k, true);
    }
    return out;
}

} // namespace floercone
