#include "mfkit/fullness.hpp"

#include <algorithm>

namespace mfkit {

namespace {

const char kVar[] = {'x', 'y', 'z', 't'};

std::string trunc_name(int v, long long i) {
    if (i == 1) return "k";
    return std::string("k[") + kVar[v] + "]/(" + kVar[v] + "^" + std::to_string(i) + ")";
}

// k[x_a, x_b]/(x_a^i); at i = 1 this is the coordinate axis of x_b
std::string plane_trunc_name(int a, int b, long long i) {
    if (i == 1) return std::string("M") + kVar[b];
    return std::string("k[") + kVar[a] + "," + kVar[b] + "]/(" + kVar[a] + "^" + std::to_string(i) + ")";
}

std::string plane_prod_name(int a, int b, long long i) {
    return std::string("k[") + kVar[a] + "," + kVar[b] + "]/(" + kVar[b] + kVar[a] + "^" +
           std::to_string(i) + ")";
}

std::string axis_name(int v) { return std::string("M") + kVar[v]; }

std::string pair_union_name(int a, int b) {
    if (a > b) std::swap(a, b);
    return std::string("M") + kVar[a] + kVar[b];
}

struct Registrar {
    const ModelCase& c;
    RuleSet& out;

    void module(const std::string& name, const MonomialModule& m) {
        if (!well_defined_over(c.wpoly, m))
            throw std::logic_error("rule module " + name + " is not defined over the quotient in case " + c.name);
        auto copy = m;
        copy.name = name;
        out.modules.emplace(name, std::move(copy));
    }

    bool perfect(const std::string& name) const {
        const MonomialModule& m = out.modules.at(name);
        // split the ideal into killed variables and at most one extra monomial
        std::vector<int> support;
        std::vector<Expo> extra;
        std::vector<char> killed(static_cast<size_t>(c.nvars), 0);
        for (const Expo& e : m.ideal_gens) {
            int nz = 0, var = -1;
            for (int v = 0; v < c.nvars; ++v)
                if (e[v] > 0) {
                    ++nz;
                    var = v;
                }
            if (nz == 1 && e[var] == 1)
                killed[var] = 1;
            else
                extra.push_back(e);
        }
        if (extra.size() != 1) return false;
        for (int v = 0; v < c.nvars; ++v)
            if (!killed[v]) support.push_back(v);
        MonomialModule face;  // the face the module lives on
        face.nvars = c.nvars;
        for (int v = 0; v < c.nvars; ++v)
            if (killed[v]) face.ideal_gens.push_back([&] {
                Expo e(c.nvars, 0);
                e[v] = 1;
                return e;
            }());
        if (!acts_injectively(c.wpoly, face)) return false;
        Poly restricted = c.wpoly.restricted_to(support);
        return restricted == Poly::monomial(c.nvars, extra[0]);
    }

    // SES 0 -> (+) left_i (tau_i) -> mid (tau_m) -> right (tau_r) -> 0
    void ses(const std::string& provenance, std::vector<std::pair<std::string, GVec>> left,
             std::pair<std::string, GVec> mid, std::pair<std::string, GVec> right) {
        probe(provenance, left, mid, right);
        auto minus = [&](std::vector<std::pair<std::string, GVec>> slots,
                         std::pair<std::string, GVec> target) {
            GenRule r;
            r.provenance = provenance;
            r.output = std::move(target);
            if (perfect(r.output.first)) return;  // nothing to generate
            for (auto& s : slots)
                if (!perfect(s.first)) r.inputs.push_back(std::move(s));
            out.rules.push_back(std::move(r));
        };
        {
            auto slots = left;
            slots.push_back(right);
            minus(std::move(slots), mid);
        }
        {
            auto slots = left;
            slots.push_back(mid);
            minus(std::move(slots), right);
        }
        if (left.size() == 1) {
            minus({mid, right}, left[0]);
        }
    }

    void probe(const std::string& provenance, const std::vector<std::pair<std::string, GVec>>& left,
               const std::pair<std::string, GVec>& mid, const std::pair<std::string, GVec>& right) const {
        // dimension additivity over ten probe degrees, including shifts past
        // the degree of w where the truncation families genuinely differ
        std::vector<GVec> probes{gvec_zero(c.nvars), c.g.wdeg, gvec_add(c.g.wdeg, c.g.wdeg)};
        for (int v = 0; v < c.nvars; ++v) {
            probes.push_back(c.g.xdeg[v]);
            probes.push_back(gvec_add(c.g.wdeg, c.g.xdeg[v]));
        }
        while (probes.size() < 10)
            probes.push_back(gvec_add(probes[probes.size() - 3], c.g.xdeg[0]));
        probes.resize(10);
        for (const GVec& d : probes) {
            long lhs = 0;
            for (const auto& [k, tau] : left) lhs += module_dim(c.g, out.modules.at(k), gvec_add(d, tau));
            lhs += module_dim(c.g, out.modules.at(right.first), gvec_add(d, right.second));
            long rhs = module_dim(c.g, out.modules.at(mid.first), gvec_add(d, mid.second));
            if (lhs != rhs)
                throw std::logic_error("exact sequence probe failed for rule " + provenance + " in case " +
                                       c.name);
        }
    }

    GVec xv(int v, long long mult = 1) const { return gvec_scale(mult, c.g.xdeg[v]); }
    GVec zero() const { return gvec_zero(c.nvars); }

    // truncation ladder in variable v: 0 -> k(-i x_v) -> T_{i+1} -> T_i -> 0
    void ladders(int v) {
        long long pv = c.exps[static_cast<size_t>(v)];
        for (long long i = 1; i <= pv; ++i) module(trunc_name(v, i), truncation_module(c, v, i));
        for (long long i = 1; i < pv; ++i)
            ses("ladder(" + std::string(1, kVar[v]) + "," + std::to_string(i) + ")",
                {{"k", xv(v, -i)}}, {trunc_name(v, i + 1), zero()}, {trunc_name(v, i), zero()});
    }

    // wraparound 0 -> M_v(-p_v x_v) -> M_v -> T_{p_v} -> 0
    void wrap(int v) {
        long long pv = c.exps[static_cast<size_t>(v)];
        ses("wrap(" + std::string(1, kVar[v]) + ")", {{axis_name(v), xv(v, -pv)}}, {axis_name(v), zero()},
            {trunc_name(v, pv), zero()});
    }

    // 0 -> M_v(-x_v) -> M_v -> k -> 0
    void axis_to_point(int v) {
        ses("axis(" + std::string(1, kVar[v]) + ")", {{axis_name(v), xv(v, -1)}}, {axis_name(v), zero()},
            {"k", zero()});
    }

    // 0 -> M_a(-x_a) -> M_ab -> M_b -> 0
    void union_split(int a, int b) {
        ses("union(" + std::string(1, kVar[a]) + "|" + pair_union_name(a, b) + ")",
            {{axis_name(a), xv(a, -1)}}, {pair_union_name(a, b), zero()}, {axis_name(b), zero()});
    }

    // plane family ladders for k[x_a, x_b]/(x_a^i): 0 -> M_b(-i x_a) -> P_{i+1} -> P_i -> 0
    void plane_ladders(int a, int b) {
        long long pa = c.exps[static_cast<size_t>(a)];
        for (long long i = 1; i <= pa; ++i)
            module(plane_trunc_name(a, b, i), plane_truncation_module(c, a, b, a, i));
        for (long long i = 1; i < pa; ++i)
            ses("plane-ladder(" + std::string(1, kVar[a]) + "," + std::string(1, kVar[b]) + "," +
                    std::to_string(i) + ")",
                {{axis_name(b), xv(a, -i)}}, {plane_trunc_name(a, b, i + 1), zero()},
                {plane_trunc_name(a, b, i), zero()});
    }

    // loop-case eliminations through the perfect quotient k[x_a,x_b]/(x_b x_a^p):
    //   0 -> M_ab(-(p-1)x_a) -> PP -> P_{p-1} -> 0
    //   0 -> M_a(-p x_a)     -> PP -> P_p     -> 0
    void plane_product_rules(int a, int b) {
        long long pa = c.exps[static_cast<size_t>(a)];
        module(plane_prod_name(a, b, pa), plane_product_module(c, a, b, pa));
        ses("plane-cap(" + std::string(1, kVar[a]) + "," + std::string(1, kVar[b]) + ")",
            {{pair_union_name(a, b), xv(a, -(pa - 1))}}, {plane_prod_name(a, b, pa), zero()},
            {plane_trunc_name(a, b, pa - 1), zero()});
        ses("plane-top(" + std::string(1, kVar[a]) + "," + std::string(1, kVar[b]) + ")",
            {{axis_name(a), xv(a, -pa)}}, {plane_prod_name(a, b, pa), zero()},
            {plane_trunc_name(a, b, pa), zero()});
    }
};

}  // namespace

RuleSet register_rules(const ModelCase& c) {
    RuleSet rs;
    rs.model = c;
    Registrar reg{c, rs};

    reg.module("k", kind_module(c, "k"));
    const std::string& n = c.name;

    auto base_axes = [&](std::initializer_list<int> axes) {
        for (int v : axes) reg.module(std::string("M") + kVar[v], [&] {
            MonomialModule m;
            m.nvars = c.nvars;
            for (int u = 0; u < c.nvars; ++u)
                if (u != v) m.ideal_gens.push_back([&] {
                    Expo e(c.nvars, 0);
                    e[u] = 1;
                    return e;
                }());
            return m;
        }());
    };
    auto pair_union_module = [&](int a, int b) {
        MonomialModule m;
        m.nvars = c.nvars;
        Expo e(c.nvars, 0);
        e[a] = e[b] = 1;
        m.ideal_gens.push_back(e);
        for (int u = 0; u < c.nvars; ++u)
            if (u != a && u != b) m.ideal_gens.push_back([&] {
                Expo t(c.nvars, 0);
                t[u] = 1;
                return t;
            }());
        return m;
    };

    if (n == "1-chain") {
        reg.ladders(0);
    } else if (n == "2-split") {
        reg.ladders(0);
        reg.ladders(1);
    } else if (n == "2-chain") {
        base_axes({1});
        reg.ladders(0);
        reg.ladders(1);
        reg.wrap(1);
    } else if (n == "2-loop") {
        base_axes({0, 1});
        reg.module("Mxy", pair_union_module(0, 1));
        reg.ladders(0);
        reg.ladders(1);
        reg.wrap(0);
        reg.wrap(1);
        reg.axis_to_point(0);
        reg.axis_to_point(1);
        reg.union_split(0, 1);
        reg.union_split(1, 0);
    } else if (n == "3-split-a") {
        reg.ladders(0);
        reg.ladders(1);
        reg.ladders(2);
    } else if (n == "3-split-b") {
        base_axes({1});
        reg.ladders(0);
        reg.ladders(1);
        reg.ladders(2);
        reg.wrap(1);
    } else if (n == "3-split-c") {
        base_axes({0, 1});
        reg.module("Mxy", pair_union_module(0, 1));
        reg.ladders(0);
        reg.ladders(1);
        reg.ladders(2);
        reg.wrap(0);
        reg.wrap(1);
        reg.axis_to_point(0);
        reg.axis_to_point(1);
        reg.union_split(0, 1);
        reg.union_split(1, 0);
    } else if (n == "3-chain") {
        base_axes({1, 2});
        reg.ladders(0);
        reg.ladders(1);
        reg.ladders(2);
        reg.wrap(1);
        reg.wrap(2);
        reg.plane_ladders(0, 2);  // x-expansion of the z-axis modules
    } else if (n == "3-loop") {
        base_axes({0, 1, 2});
        reg.module("Mxy", pair_union_module(0, 1));
        reg.module("Mxz", pair_union_module(0, 2));
        reg.module("Myz", pair_union_module(1, 2));
        reg.module("Mxyz", kind_module(c, "Mxyz"));
        for (int v = 0; v < 3; ++v) {
            reg.ladders(v);
            reg.wrap(v);
            reg.axis_to_point(v);
        }
        reg.union_split(0, 1);
        reg.union_split(1, 0);
        reg.union_split(0, 2);
        reg.union_split(2, 0);
        reg.union_split(1, 2);
        reg.union_split(2, 1);
        // cyclically permuted plane families: (x,z), (y,x), (z,y)
        reg.plane_ladders(0, 2);
        reg.plane_ladders(1, 0);
        reg.plane_ladders(2, 1);
        reg.plane_product_rules(0, 2);
        reg.plane_product_rules(1, 0);
        reg.plane_product_rules(2, 1);
        // corner module against the three pair unions and the three axes
        reg.ses("corner(y|Mxz)", {{"My", reg.xv(1, -1)}}, {"Mxyz", reg.zero()}, {"Mxz", reg.zero()});
        reg.ses("corner(z|Mxy)", {{"Mz", reg.xv(2, -1)}}, {"Mxyz", reg.zero()}, {"Mxy", reg.zero()});
        reg.ses("corner(x|Myz)", {{"Mx", reg.xv(0, -1)}}, {"Mxyz", reg.zero()}, {"Myz", reg.zero()});
        reg.ses("corner(xy|Mz)", {{"Mx", reg.xv(0, -1)}, {"My", reg.xv(1, -1)}}, {"Mxyz", reg.zero()},
                {"Mz", reg.zero()});
        reg.ses("corner(yz|Mx)", {{"My", reg.xv(1, -1)}, {"Mz", reg.xv(2, -1)}}, {"Mxyz", reg.zero()},
                {"Mx", reg.zero()});
        reg.ses("corner(zx|My)", {{"Mz", reg.xv(2, -1)}, {"Mx", reg.xv(0, -1)}}, {"Mxyz", reg.zero()},
                {"My", reg.zero()});
        reg.ses("corner(xyz|k)", {{"Mx", reg.xv(0, -1)}, {"My", reg.xv(1, -1)}, {"Mz", reg.xv(2, -1)}},
                {"Mxyz", reg.zero()}, {"k", reg.zero()});
    } else {
        throw InputError("register_rules: unsupported case " + n);
    }
    return rs;
}

GenState state_of_object(const ModelCase& c, const CollectionObject& o) {
    return GenState{o.kind, c.g.Lbar->canonical_form(o.twist)};
}

GenerationState saturate(const GenerationState& seed, const RuleSet& rules) {
    const ModelCase& c = rules.model;
    GenerationState st = seed;
    std::vector<GVec> classes;
    for (const GVec& rep : enumerate_quotient(*c.g.Lbar, gvec_zero(c.nvars))) classes.push_back(rep);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const GenRule& r : rules.rules) {
            for (const GVec& cls : classes) {
                GenState target{r.output.first,
                                c.g.Lbar->canonical_form(gvec_add(r.output.second, cls))};
                if (st.have.count(target)) continue;
                bool ready = true;
                for (const auto& [kind, off] : r.inputs) {
                    GenState need{kind, c.g.Lbar->canonical_form(gvec_add(off, cls))};
                    if (!st.have.count(need)) {
                        ready = false;
                        break;
                    }
                }
                if (!ready) continue;
                st.have.insert(target);
                st.trace.push_back({r.provenance, cls, target});
                changed = true;
            }
        }
    }
    return st;
}

FullnessCertificate certify_fullness_seeded(const ModelCase& c, const std::vector<GenState>& seed) {
    RuleSet rules = register_rules(c);
    GenerationState st;
    for (const GenState& s : seed) st.have.insert(s);
    GenerationState fixed = saturate(st, rules);

    FullnessCertificate cert;
    cert.trace = fixed.trace;
    cert.classes_total = c.g.Lbar->order();
    for (const GVec& rep : enumerate_quotient(*c.g.Lbar, gvec_zero(c.nvars))) {
        GenState goal{"k", c.g.Lbar->canonical_form(rep)};
        if (fixed.have.count(goal))
            ++cert.classes_covered;
        else
            cert.missing.push_back(goal.cls);
    }
    cert.certified = (cert.classes_covered == cert.classes_total);
    return cert;
}

FullnessCertificate certify_fullness(const ExceptionalCollection& c) {
    std::vector<GenState> seed;
    for (const CollectionObject& o : c.objects) seed.push_back(state_of_object(c.model, o));
    return certify_fullness_seeded(c.model, seed);
}

}  // namespace mfkit
