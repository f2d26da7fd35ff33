#include "mfkit/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mfkit {

DimQuiver quiver_from_report(const ExceptionalCollection& c, const VerificationReport& r) {
    DimQuiver q;
    q.num_vertices = static_cast<int>(c.objects.size());
    for (const RealizedArrow& a : r.arrows) q.edges.push_back({a.src, a.dst, a.dim, a.bracket});
    return q;
}

BlockDecomposition antidiagonal_blocks(const ExceptionalCollection& c) {
    std::map<int, std::vector<int>> by_sum;
    for (size_t i = 0; i < c.objects.size(); ++i) {
        int s = std::accumulate(c.objects[i].pos.begin(), c.objects[i].pos.end(), 0);
        by_sum[s].push_back(static_cast<int>(i));
    }
    BlockDecomposition bd;
    for (auto& [s, verts] : by_sum) bd.blocks.push_back(std::move(verts));
    return bd;
}

bool block_internally_orthogonal(const DimQuiver& q, const std::vector<int>& block) {
    for (const auto& e : q.edges) {
        bool s = std::find(block.begin(), block.end(), e.src) != block.end();
        bool d = std::find(block.begin(), block.end(), e.dst) != block.end();
        if (s && d) return false;
    }
    return true;
}

bool blocks_orthogonal(const DimQuiver& q, const std::vector<int>& a, const std::vector<int>& b) {
    for (const auto& e : q.edges) {
        bool sa = std::find(a.begin(), a.end(), e.src) != a.end();
        bool da = std::find(a.begin(), a.end(), e.dst) != a.end();
        bool sb = std::find(b.begin(), b.end(), e.src) != b.end();
        bool db = std::find(b.begin(), b.end(), e.dst) != b.end();
        if ((sa && db) || (sb && da)) return false;
    }
    return true;
}

namespace {

void check_window_condition(const DimQuiver& q, const BlockDecomposition& bd, int window) {
    const int n = static_cast<int>(bd.blocks.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > window && !blocks_orthogonal(q, bd.blocks[i], bd.blocks[j]))
                throw std::logic_error("block window condition violated");
}

}  // namespace

void invert_sink_block(DimQuiver& q, BlockDecomposition& bd, int window) {
    const int n = static_cast<int>(bd.blocks.size());
    if (n == 0) return;
    const std::vector<int> sink = bd.blocks.back();
    if (sink.empty()) {
        bd.blocks.pop_back();
        return;
    }
    if (!block_internally_orthogonal(q, sink)) throw std::logic_error("sink block is not orthogonal");
    // the sink must have no outgoing arrows
    for (const auto& e : q.edges)
        if (std::find(sink.begin(), sink.end(), e.src) != sink.end())
            throw std::logic_error("last block has outgoing arrows; refusing to mutate");
    // head blocks (all but the trailing window and the sink) must be
    // orthogonal to the sink
    int head_count = std::max(0, n - window - 1);
    for (int i = 0; i < head_count; ++i)
        if (!blocks_orthogonal(q, bd.blocks[i], sink))
            throw std::logic_error("head is not orthogonal to the sink block; refusing to mutate");

    for (auto& e : q.edges) {
        if (std::find(sink.begin(), sink.end(), e.dst) != sink.end()) {
            if (e.bracket != 0) throw std::logic_error("mutating a non-strong arrow");
            std::swap(e.src, e.dst);  // dimension preserved, direction reversed
        }
    }
    // relocate the sink right after the head
    bd.blocks.pop_back();
    bd.blocks.insert(bd.blocks.begin() + head_count, sink);
}

std::vector<MutationStep> reduce_blocks(DimQuiver& q, BlockDecomposition& bd, int window) {
    std::vector<MutationStep> trace;
    check_window_condition(q, bd, window);
    while (static_cast<int>(bd.blocks.size()) > window + 1) {
        const int n = static_cast<int>(bd.blocks.size());
        invert_sink_block(q, bd, window);
        // the relocated sink sits at position n - window - 1 (0-based
        // n-window-2 after popping); unite it with the preceding block
        int pos = n - window - 1;  // 0-based position of the relocated sink
        MutationStep step;
        step.sink_block = n;
        step.merged_into = pos;  // 1-based index of the block it joins
        if (pos - 1 < 0) throw std::logic_error("no block to merge into");
        if (!blocks_orthogonal(q, bd.blocks[pos - 1], bd.blocks[pos]))
            throw std::logic_error("merge target not orthogonal to mutated block");
        for (int v : bd.blocks[pos]) bd.blocks[pos - 1].push_back(v);
        bd.blocks.erase(bd.blocks.begin() + pos);
        check_window_condition(q, bd, window);
        for (const auto& b : bd.blocks)
            if (!block_internally_orthogonal(q, b)) throw std::logic_error("block lost orthogonality");
        trace.push_back(step);
    }
    return trace;
}

namespace {

MatrixFactorization empty_mf(const GradingData& g, const Poly& w) {
    MatrixFactorization m;
    m.g = g;
    m.w = w;
    m.wdeg = g.wdeg;
    m.d1 = PolyMat(0, 0, g.nvars);
    m.d0 = PolyMat(0, 0, g.nvars);
    return m;
}

}  // namespace

MatrixFactorization concrete_mutation(const MatrixFactorization& e, const MatrixFactorization& f,
                                      const std::string& direction) {
    const GradingData& g = e.g;
    GradedHomTable ext = stable_hom_mf(e, f);

    struct ClassData {
        GVec l;
        int parity;
        MFMorphism rep;
    };
    // only the untwisted extensions Hom(E, F[i]) enter the (co)evaluation;
    // their table entries sit at twists in the subgroup generated by wdeg
    std::vector<ClassData> classes;
    for (int parity = 0; parity < 2; ++parity)
        for (const auto& [lift, dim] : ext.support(parity)) {
            long long r = g.rho(lift);
            if (g.rho_w == 0 || r % g.rho_w != 0) continue;
            long long j = r / g.rho_w;
            if (!g.L->equal(lift, gvec_scale(j, g.wdeg))) continue;
            auto basis = cocycle_basis(e, f, lift, parity);
            if (static_cast<long>(basis.size()) != dim)
                throw std::logic_error("cocycle basis does not match the table dimension");
            for (auto& b : basis) classes.push_back({lift, parity, std::move(b)});
        }

    if (direction == "left") {
        // L_E F = cone(ev : V (x) E -> F)[-1]
        MatrixFactorization s = empty_mf(g, e.w);
        std::vector<MatrixFactorization> summands;
        for (const auto& cd : classes) {
            MatrixFactorization src = twist(e, gvec_neg(cd.l));
            if (cd.parity == 1) src = shift(src, -1);
            summands.push_back(src);
            s = direct_sum(s, src);
        }
        MFMorphism ev;
        ev.parity = 0;
        ev.twist = gvec_zero(g.nvars);
        ev.a = PolyMat(f.rank_even(), s.rank_even(), g.nvars);
        ev.b = PolyMat(f.rank_odd(), s.rank_odd(), g.nvars);
        int ce = 0, co = 0;
        for (size_t k = 0; k < classes.size(); ++k) {
            const auto& cd = classes[k];
            // component morphism: even cocycle (a, b) maps through directly;
            // odd cocycle becomes (a', b') = (g_a, g_b) on the [-1]-shifted source
            const PolyMat& pa = cd.rep.a;
            const PolyMat& pb = cd.rep.b;
            for (int i = 0; i < pa.rows; ++i)
                for (int j = 0; j < pa.cols; ++j) ev.a.at(i, ce + j) = pa.at(i, j);
            for (int i = 0; i < pb.rows; ++i)
                for (int j = 0; j < pb.cols; ++j) ev.b.at(i, co + j) = pb.at(i, j);
            ce += summands[k].rank_even();
            co += summands[k].rank_odd();
        }
        return shift(cone(s, f, ev), -1);
    }
    if (direction == "right") {
        // R_F E = cone(coev : E -> V* (x) F)
        MatrixFactorization d = empty_mf(g, e.w);
        std::vector<MatrixFactorization> summands;
        for (const auto& cd : classes) {
            MatrixFactorization dst = twist(f, cd.l);
            if (cd.parity == 1) dst = shift(dst, 1);
            summands.push_back(dst);
            d = direct_sum(d, dst);
        }
        MFMorphism coev;
        coev.parity = 0;
        coev.twist = gvec_zero(g.nvars);
        coev.a = PolyMat(d.rank_even(), e.rank_even(), g.nvars);
        coev.b = PolyMat(d.rank_odd(), e.rank_odd(), g.nvars);
        int ce = 0, co = 0;
        for (size_t k = 0; k < classes.size(); ++k) {
            const auto& cd = classes[k];
            // even class: rows (a, b); odd class into the shifted target:
            // rows (g_b, g_a)
            const PolyMat& pa = (cd.parity == 0) ? cd.rep.a : cd.rep.b;
            const PolyMat& pb = (cd.parity == 0) ? cd.rep.b : cd.rep.a;
            for (int i = 0; i < pa.rows; ++i)
                for (int j = 0; j < pa.cols; ++j) coev.a.at(ce + i, j) = pa.at(i, j);
            for (int i = 0; i < pb.rows; ++i)
                for (int j = 0; j < pb.cols; ++j) coev.b.at(co + i, j) = pb.at(i, j);
            ce += summands[k].rank_even();
            co += summands[k].rank_odd();
        }
        return cone(e, d, coev);
    }
    throw InputError("concrete_mutation: direction must be left or right");
}

}  // namespace mfkit
