#include "mfkit/exports.hpp"

#include <json.hpp>

#include <sstream>

namespace mfkit {

using nlohmann::json;

namespace {

json gvec_json(const GVec& v) { return json(v); }

json support_json(const GradedHomTable& t, int parity) {
    json arr = json::array();
    for (const auto& [l, dim] : t.support(parity)) {
        json e;
        e["l"] = gvec_json(l);
        e["dim"] = dim;
        arr.push_back(e);
    }
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string group_to_json(const AbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank();
    j["invariant_factors"] = g.invariant_factors();
    j["generators"] = g.num_generators();
    return dump(j);
}

std::string grading_to_json(const GradingData& g) {
    json j;
    j["group"] = json::parse(group_to_json(*g.L));
    j["reduced_group"] = json::parse(group_to_json(*g.Lbar));
    j["reduced_order"] = g.Lbar->order();
    j["potential_degree"] = gvec_json(g.wdeg);
    j["weights"] = g.rho_x;
    j["weight_of_potential"] = g.rho_w;
    return dump(j);
}

std::string decomposition_to_json(const AtomicDecomposition& d) {
    json parts = json::array();
    for (const Atom& a : d.parts) {
        json p;
        p["kind"] = (a.kind == Atom::Loop) ? "loop" : "chain";
        p["variables"] = a.vars;
        p["exponents"] = a.exps;
        parts.push_back(p);
    }
    json j;
    j["atoms"] = parts;
    j["case"] = case_name(d);
    return dump(j);
}

std::string table_to_tsv(const GradedHomTable& t) {
    std::ostringstream os;
    os << "l\tparity\tdim\n";
    for (int parity = 0; parity < 2; ++parity)
        for (const auto& [l, dim] : t.support(parity)) {
            for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
            os << "\t" << parity << "\t" << dim << "\n";
        }
    return os.str();
}

std::string table_to_json(const GradedHomTable& t) {
    json j;
    j["schema"] = "graded-hom-table/1";
    j["even"] = support_json(t, 0);
    j["odd"] = support_json(t, 1);
    j["window"] = {{"rho_lo", t.rho_lo}, {"rho_hi", t.rho_hi}, {"audited", t.audited}};
    return dump(j);
}

namespace {

json object_json(const CollectionObject& o) {
    json j;
    j["kind"] = o.kind;
    j["twist"] = gvec_json(o.twist);
    j["shift"] = o.homshift;
    j["position"] = o.pos;
    return j;
}

std::string node_id(const CollectionObject& o) {
    std::string s = "n";
    for (int p : o.pos) s += "_" + std::to_string(p + 9);
    return s;
}

}  // namespace

std::string collection_to_json(const ExceptionalCollection& c) {
    json j;
    j["schema"] = "collection/1";
    j["case"] = c.model.name;
    j["exponents"] = c.model.exps;
    j["strong_variant"] = c.strong_variant;
    json objs = json::array();
    for (const auto& o : c.objects) objs.push_back(object_json(o));
    j["objects"] = objs;
    return dump(j);
}

std::string collection_to_dot(const ExceptionalCollection& c) {
    std::ostringstream os;
    os << "digraph collection {\n  rankdir=BT;\n";
    for (const auto& o : c.objects) {
        os << "  " << node_id(o) << " [label=\"" << o.kind << " @(";
        for (size_t i = 0; i < o.pos.size(); ++i) os << (i ? "," : "") << o.pos[i];
        os << ")\"];\n";
    }
    for (const auto& a : expected_arrows(c)) {
        os << "  " << node_id(c.objects[a.src]) << " -> " << node_id(c.objects[a.dst]);
        if (a.dim != 1) os << " [label=\"" << a.dim << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

json arrow_json(const ExceptionalCollection& c, const RealizedArrow& a) {
    json j;
    j["src"] = object_json(c.objects[a.src]);
    j["dst"] = object_json(c.objects[a.dst]);
    j["bracket"] = a.bracket;
    j["dim"] = a.dim;
    return j;
}

}  // namespace

std::string report_to_json(const ExceptionalCollection& c, const VerificationReport& r) {
    json j;
    j["schema"] = "verification-report/1";
    j["case"] = c.model.name;
    j["exponents"] = c.model.exps;
    j["objects_exceptional"] = r.objects_exceptional;
    j["hom_digraph_acyclic"] = r.hom_digraph_acyclic;
    j["lex_semiorthogonal"] = r.lex_semiorthogonal;
    j["strong"] = r.strong;
    j["pattern_matches"] = r.pattern_matches;
    j["strong_exceptional"] = r.strong_exceptional();
    json arrows = json::array();
    for (const auto& a : r.arrows) arrows.push_back(arrow_json(c, a));
    j["arrows"] = arrows;
    json viol = json::array();
    for (const auto& v : r.violations) viol.push_back(arrow_json(c, v));
    j["violations"] = viol;
    json missing = json::array();
    for (const auto& m : r.missing) {
        json e;
        e["src"] = object_json(c.objects[m.src]);
        e["dst"] = object_json(c.objects[m.dst]);
        e["dim"] = m.dim;
        missing.push_back(e);
    }
    j["missing_arrows"] = missing;
    json extra = json::array();
    for (const auto& v : r.extra) extra.push_back(arrow_json(c, v));
    j["extra_arrows"] = extra;
    return dump(j);
}

std::string report_to_tsv(const ExceptionalCollection& c, const VerificationReport& r) {
    std::ostringstream os;
    os << "src\tdst\tbracket\tdim\n";
    for (const auto& a : r.arrows) {
        const auto& s = c.objects[a.src];
        const auto& d = c.objects[a.dst];
        os << s.kind << "@";
        for (size_t i = 0; i < s.pos.size(); ++i) os << (i ? "," : "") << s.pos[i];
        os << "\t" << d.kind << "@";
        for (size_t i = 0; i < d.pos.size(); ++i) os << (i ? "," : "") << d.pos[i];
        os << "\t" << a.bracket << "\t" << a.dim << "\n";
    }
    return os.str();
}

std::string certificate_to_json(const FullnessCertificate& cert) {
    json j;
    j["schema"] = "fullness-certificate/1";
    j["certified"] = cert.certified;
    j["classes_covered"] = cert.classes_covered;
    j["classes_total"] = cert.classes_total;
    json steps = json::array();
    for (const auto& s : cert.trace) {
        json e;
        e["rule"] = s.provenance;
        e["twist_class"] = s.shift;
        e["produced_kind"] = s.produced.kind;
        e["produced_class"] = s.produced.cls;
        steps.push_back(e);
    }
    j["trace"] = steps;
    json miss = json::array();
    for (const auto& m : cert.missing) miss.push_back(m);
    j["missing_classes"] = miss;
    return dump(j);
}

std::string quiver_to_dot(const ExceptionalCollection& c, const DimQuiver& q, const BlockDecomposition& bd,
                          const DimQuiver* before) {
    std::ostringstream os;
    os << "digraph quiver {\n  rankdir=BT;\n";
    for (size_t b = 0; b < bd.blocks.size(); ++b) {
        os << "  subgraph cluster_" << b << " {\n    label=\"block " << (b + 1) << "\";\n";
        for (int v : bd.blocks[b]) os << "    " << node_id(c.objects[v]) << " [label=\"" << c.objects[v].kind << "\"];\n";
        os << "  }\n";
    }
    // arrows reversed relative to `before` are drawn dashed
    auto was_present = [&](int s, int d) {
        if (!before) return true;
        for (const auto& e : before->edges)
            if (e.src == s && e.dst == d) return true;
        return false;
    };
    for (const auto& e : q.edges) {
        os << "  " << node_id(c.objects[e.src]) << " -> " << node_id(c.objects[e.dst]);
        std::string attrs;
        if (!was_present(e.src, e.dst)) attrs += "style=dashed";
        if (e.dim != 1) attrs += (attrs.empty() ? "" : ",") + std::string("label=\"") + std::to_string(e.dim) + "\"";
        if (!attrs.empty()) os << " [" << attrs << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string blocks_trace_to_json(const BlockDecomposition& initial, const BlockDecomposition& final_bd,
                                 const std::vector<MutationStep>& trace) {
    json j;
    j["schema"] = "block-reduction/1";
    j["initial_blocks"] = initial.blocks.size();
    j["final_blocks"] = final_bd.blocks.size();
    json sizes = json::array();
    for (const auto& b : initial.blocks) sizes.push_back(b.size());
    j["initial_sizes"] = sizes;
    json fsizes = json::array();
    for (const auto& b : final_bd.blocks) fsizes.push_back(b.size());
    j["final_sizes"] = fsizes;
    json steps = json::array();
    for (const auto& s : trace) steps.push_back({{"sink", s.sink_block}, {"merged_into", s.merged_into}});
    j["merges"] = steps;
    return dump(j);
}

std::string mf_to_json(const MatrixFactorization& m) {
    json j;
    j["schema"] = "matrix-factorization/1";
    json te = json::array(), to = json::array();
    for (const auto& t : m.tw_even) te.push_back(t);
    for (const auto& t : m.tw_odd) to.push_back(t);
    j["twists_even"] = te;
    j["twists_odd"] = to;
    auto mat_json = [](const PolyMat& pm) {
        json rows = json::array();
        for (int i = 0; i < pm.rows; ++i) {
            json row = json::array();
            for (int jx = 0; jx < pm.cols; ++jx) {
                json terms = json::array();
                for (const auto& [e, c] : pm.at(i, jx).terms) {
                    json t;
                    t["exp"] = e;
                    t["coeff"] = c.str();
                    terms.push_back(t);
                }
                row.push_back(terms);
            }
            rows.push_back(row);
        }
        return rows;
    };
    j["d_odd_to_even"] = mat_json(m.d1);
    j["d_even_to_odd"] = mat_json(m.d0);
    return dump(j);
}

}  // namespace mfkit
