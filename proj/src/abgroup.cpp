#include "mfkit/abgroup.hpp"

#include <numeric>

namespace mfkit {

GVec gvec_add(const GVec& a, const GVec& b) {
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

GVec gvec_sub(const GVec& a, const GVec& b) {
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

GVec gvec_neg(const GVec& a) {
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

GVec gvec_scale(long long k, const GVec& a) {
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

GVec gvec_zero(int n) { return GVec(static_cast<size_t>(n), 0); }

namespace {
long long mod_floor(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}
}  // namespace

AbelianGroup AbelianGroup::from_presentation(const GroupPresentation& p) {
    AbelianGroup g;
    g.ngen_ = p.num_generators;
    g.presentation_ = p;
    for (const auto& r : p.relations)
        if (static_cast<int>(r.size()) != p.num_generators)
            throw InputError("relation length does not match generator count");

    // relation lattice as columns of an n x m matrix
    IntMat rel(p.num_generators, std::max<int>(1, static_cast<int>(p.relations.size())));
    for (size_t j = 0; j < p.relations.size(); ++j)
        for (int i = 0; i < p.num_generators; ++i) rel.at(i, static_cast<int>(j)) = p.relations[j][i];

    SNFResult snf = smith_normal_form(rel);
    g.U_ = snf.U;

    // invert U exactly (unimodular, so the inverse is integral)
    const int n = p.num_generators;
    g.Uinv_ = IntMat(n, n);
    {
        RatMat aug(n, 2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(snf.U.at(i, j));
            aug.at(i, n + i) = 1;
        }
        rref(aug);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat v = aug.at(i, n + j);
                if (boost::multiprecision::denominator(v) != 1)
                    throw std::logic_error("change of basis is not unimodular");
                g.Uinv_.at(i, j) = boost::multiprecision::numerator(v);
            }
    }

    for (int i = 0; i < n; ++i) {
        Int d = (i < snf.D.cols) ? snf.D.at(i, i) : Int(0);
        if (d == 0)
            g.free_rows_.push_back(i);
        else if (d > 1) {
            g.torsion_rows_.push_back(i);
            g.invariant_factors_.push_back(to_ll(d));
        }
        // d == 1 rows carry no information and are dropped
    }
    return g;
}

AbelianGroup group_from_presentation(const GroupPresentation& p) { return AbelianGroup::from_presentation(p); }

long long AbelianGroup::order() const {
    if (!free_rows_.empty()) return 0;
    long long o = 1;
    for (long long d : invariant_factors_) o *= d;
    return o;
}

std::vector<long long> AbelianGroup::canonical_form(const GVec& g) const {
    if (static_cast<int>(g.size()) != ngen_) throw InputError("element length does not match generator count");
    std::vector<Int> y(ngen_, 0);
    for (int i = 0; i < ngen_; ++i)
        for (int j = 0; j < ngen_; ++j) y[i] += U_.at(i, j) * g[j];

    std::vector<long long> canon;
    canon.reserve(free_rows_.size() + torsion_rows_.size());
    for (int r : free_rows_) canon.push_back(to_ll(y[r]));
    for (size_t k = 0; k < torsion_rows_.size(); ++k)
        canon.push_back(mod_floor(to_ll(y[torsion_rows_[k]]), invariant_factors_[k]));
    return canon;
}

bool AbelianGroup::equal(const GVec& a, const GVec& b) const { return canonical_form(a) == canonical_form(b); }

bool AbelianGroup::is_zero(const GVec& g) const {
    auto c = canonical_form(g);
    for (long long v : c)
        if (v != 0) return false;
    return true;
}

GVec AbelianGroup::from_canonical(const std::vector<long long>& canon) const {
    if (canon.size() != free_rows_.size() + torsion_rows_.size())
        throw InputError("canonical tuple has wrong length");
    std::vector<Int> y(ngen_, 0);
    for (size_t k = 0; k < free_rows_.size(); ++k) y[free_rows_[k]] = canon[k];
    for (size_t k = 0; k < torsion_rows_.size(); ++k) y[torsion_rows_[k]] = canon[free_rows_.size() + k];
    GVec x(ngen_, 0);
    for (int i = 0; i < ngen_; ++i) {
        Int v = 0;
        for (int j = 0; j < ngen_; ++j) v += Uinv_.at(i, j) * y[j];
        x[i] = to_ll(v);
    }
    return x;
}

long long AbelianGroup::element_order(const GVec& g) const {
    auto c = canonical_form(g);
    for (size_t k = 0; k < free_rows_.size(); ++k)
        if (c[k] != 0) return 0;
    long long o = 1;
    for (size_t k = 0; k < torsion_rows_.size(); ++k) {
        long long v = c[free_rows_.size() + k];
        long long d = invariant_factors_[k];
        if (v == 0) continue;
        long long ord = d / std::gcd(d, v);
        o = std::lcm(o, ord);
    }
    return o;
}

std::vector<GVec> enumerate_quotient(const AbelianGroup& g, const GVec& h) {
    GroupPresentation p = g.presentation();
    p.relations.push_back(h);
    AbelianGroup q = AbelianGroup::from_presentation(p);
    if (q.free_rank() != 0) throw InputError("quotient is infinite");

    std::vector<GVec> reps;
    std::vector<long long> tuple(q.invariant_factors().size(), 0);
    for (;;) {
        reps.push_back(q.from_canonical(tuple));
        size_t k = 0;
        while (k < tuple.size()) {
            if (++tuple[k] < q.invariant_factors()[k]) break;
            tuple[k] = 0;
            ++k;
        }
        if (k == tuple.size()) break;
    }
    return reps;
}

}  // namespace mfkit
