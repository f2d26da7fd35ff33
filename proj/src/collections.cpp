#include "mfkit/collections.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mfkit {

namespace {

const char kVarLetters[] = {'x', 'y', 'z', 't'};

int var_index(char c) {
    for (int i = 0; i < 4; ++i)
        if (kVarLetters[i] == c) return i;
    throw InputError(std::string("unknown variable letter: ") + c);
}

}  // namespace

std::vector<std::vector<int>> kind_components(const std::string& kind) {
    if (kind == "k") return {};
    if (kind.empty() || kind[0] != 'M') throw InputError("unknown kind: " + kind);
    std::vector<std::vector<int>> comps;
    size_t i = 1;
    if (i < kind.size() && kind[i] != '[') {
        // axis-union form: each letter is a one-dimensional component
        for (; i < kind.size(); ++i) comps.push_back({var_index(kind[i])});
        return comps;
    }
    while (i < kind.size()) {
        if (kind[i] != '[') throw InputError("unknown kind: " + kind);
        ++i;
        std::vector<int> comp;
        while (i < kind.size() && kind[i] != ']') comp.push_back(var_index(kind[i++]));
        if (i == kind.size()) throw InputError("unknown kind: " + kind);
        ++i;
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string kind_name_from_components(std::vector<std::vector<int>> comps) {
    if (comps.empty()) return "k";
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end());
    bool all_axes = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 1; });
    std::string s = "M";
    if (all_axes) {
        for (const auto& c : comps) s += kVarLetters[c[0]];
        return s;
    }
    for (const auto& c : comps) {
        s += '[';
        for (int v : c) s += kVarLetters[v];
        s += ']';
    }
    return s;
}

std::vector<int> kind_support(const std::string& kind) {
    std::set<int> vars;
    for (const auto& c : kind_components(kind))
        for (int v : c) vars.insert(v);
    return std::vector<int>(vars.begin(), vars.end());
}

GVec placement_twist(const GradingData& g, const std::string& kind, const std::vector<int>& pos) {
    std::vector<int> support = kind_support(kind);
    std::vector<char> in_support(g.nvars, 0);
    for (int v : support) in_support[v] = 1;
    GVec t = gvec_zero(g.nvars);
    for (int v = 0; v < g.nvars; ++v) {
        if (in_support[v]) continue;
        t = gvec_sub(t, gvec_scale(pos[v], g.xdeg[v]));
    }
    if (support.size() >= 2)
        for (int v : support) t = gvec_add(t, g.xdeg[v]);
    return t;
}

int placement_shift(const std::string& kind, const std::vector<int>& pos) {
    std::vector<int> support = kind_support(kind);
    std::vector<char> in_support(pos.size(), 0);
    for (int v : support) in_support[v] = 1;
    int s = 0;
    for (size_t v = 0; v < pos.size(); ++v)
        if (!in_support[v]) s += pos[v];
    if (!support.empty()) s -= static_cast<int>(support.size()) - 1;
    return s;
}

namespace {

CollectionObject make_object(const GradingData& g, const std::string& kind, std::vector<int> pos) {
    CollectionObject o;
    o.kind = kind;
    o.twist = placement_twist(g, kind, pos);
    o.homshift = placement_shift(kind, pos);
    o.pos = std::move(pos);
    return o;
}

// iterate a box of positions; each range is [lo, hi] inclusive
void add_box(std::vector<CollectionObject>& out, const GradingData& g, const std::string& kind,
             const std::vector<std::pair<int, int>>& ranges) {
    std::vector<int> pos(ranges.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == ranges.size()) {
            out.push_back(make_object(g, kind, pos));
            return;
        }
        for (int v = ranges[i].first; v <= ranges[i].second; ++v) {
            pos[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

ExceptionalCollection build_collection(const std::string& case_name, const std::vector<long long>& exps,
                                       bool strong) {
    std::string base = case_name;
    if (base == "3-chain-nonstrong") {
        base = "3-chain";
        strong = false;
    }
    if (!strong && base != "3-chain") throw InputError("the non-strong variant exists for the 3-chain case only");

    ExceptionalCollection c;
    c.model = make_case(base, exps);
    c.strong_variant = strong;
    const GradingData& g = c.model.g;
    auto P = [&](int i) { return static_cast<int>(exps[static_cast<size_t>(i)]); };
    std::vector<CollectionObject>& obj = c.objects;

    const std::string& n = base;
    if (n == "1-chain") {
        add_box(obj, g, "k", {{0, P(0) - 2}});
    } else if (n == "2-split") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}});
    } else if (n == "2-chain") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}});
        add_box(obj, g, "My", {{-1, P(0) - 2}, {-1, -1}});
    } else if (n == "2-loop") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}});
        add_box(obj, g, "My", {{0, P(0) - 2}, {-1, -1}});
        add_box(obj, g, "Mx", {{-1, -1}, {0, P(1) - 2}});
        add_box(obj, g, "Mxy", {{-1, -1}, {-1, -1}});
    } else if (n == "3-split-a") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}, {0, P(2) - 2}});
    } else if (n == "3-split-b") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}, {0, P(2) - 2}});
        add_box(obj, g, "My", {{-1, P(0) - 2}, {-1, -1}, {0, P(2) - 2}});
    } else if (n == "3-split-c") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}, {0, P(2) - 2}});
        add_box(obj, g, "My", {{0, P(0) - 2}, {-1, -1}, {0, P(2) - 2}});
        add_box(obj, g, "Mx", {{-1, -1}, {0, P(1) - 2}, {0, P(2) - 2}});
        add_box(obj, g, "Mxy", {{-1, -1}, {-1, -1}, {0, P(2) - 2}});
    } else if (n == "3-chain") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}, {0, P(2) - 2}});
        add_box(obj, g, "My", {{-1, P(0) - 2}, {-1, -1}, {0, P(2) - 2}});
        add_box(obj, g, "Mz", {{0, P(0) - 2}, {0, P(1) - 2}, {-1, -1}});
        if (strong) {
            add_box(obj, g, "Mz", {{-1, P(0) - 3}, {-1, -1}, {-1, -1}});
        } else {
            add_box(obj, g, "Mz", {{0, P(0) - 2}, {-1, -1}, {-1, -1}});
        }
    } else if (n == "3-loop") {
        add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}, {0, P(2) - 2}});
        add_box(obj, g, "My", {{-1, P(0) - 2}, {-1, -1}, {0, P(2) - 2}});
        add_box(obj, g, "Mx", {{-1, -1}, {0, P(1) - 2}, {-1, P(2) - 2}});
        add_box(obj, g, "Mz", {{0, P(0) - 2}, {-1, P(1) - 2}, {-1, -1}});
        add_box(obj, g, "Mxyz", {{-1, -1}, {-1, -1}, {-1, -1}});
    } else {
        throw InputError("build_collection: unsupported case " + n);
    }

    std::sort(obj.begin(), obj.end(),
              [](const CollectionObject& a, const CollectionObject& b) { return a.pos < b.pos; });
    return c;
}

namespace {

// face exclusions: both endpoints of a kind belonging to the face's family
// (the face's own objects together with the edge objects lying on it), with
// the step matching the pattern (entries: 0, 1 or -1 for wildcard); the
// corner object of the loop case belongs to no family and keeps every arrow
struct Exclusion {
    std::vector<std::string> family;
    std::vector<int> pattern;
};

std::vector<Exclusion> exclusions_for(const std::string& name) {
    if (name == "2-chain") return {{{"My"}, {1, 0}}};
    if (name == "2-loop") return {{{"My", "Mxy"}, {1, 0}}, {{"Mx", "Mxy"}, {0, 1}}};
    if (name == "3-split-b") return {{{"My"}, {1, 0, -1}}};
    if (name == "3-split-c")
        return {{{"My", "Mxy"}, {1, 0, -1}}, {{"Mx", "Mxy"}, {0, 1, -1}}};
    if (name == "3-chain") return {{{"My"}, {1, 0, -1}}, {{"Mz"}, {-1, 1, 0}}};
    if (name == "3-loop")
        return {{{"My"}, {1, 0, -1}}, {{"Mz"}, {-1, 1, 0}}, {{"Mx"}, {0, -1, 1}}};
    return {};
}

bool matches_pattern(const std::vector<int>& step, const std::vector<int>& pattern) {
    for (size_t i = 0; i < step.size(); ++i)
        if (pattern[i] != -1 && step[i] != pattern[i]) return false;
    return true;
}

}  // namespace

std::vector<ExpectedArrow> expected_arrows(const ExceptionalCollection& c) {
    std::vector<ExpectedArrow> arrows;
    const auto& obj = c.objects;
    auto excl = exclusions_for(c.model.name);
    for (size_t a = 0; a < obj.size(); ++a)
        for (size_t b = 0; b < obj.size(); ++b) {
            if (a == b) continue;
            std::vector<int> step(obj[a].pos.size());
            bool cube = true, nonzero = false;
            for (size_t i = 0; i < step.size(); ++i) {
                step[i] = obj[b].pos[i] - obj[a].pos[i];
                if (step[i] < 0 || step[i] > 1) cube = false;
                if (step[i] != 0) nonzero = true;
            }
            if (!cube || !nonzero) continue;
            bool excluded = false;
            for (const auto& e : excl) {
                bool src_in = std::find(e.family.begin(), e.family.end(), obj[a].kind) != e.family.end();
                bool dst_in = std::find(e.family.begin(), e.family.end(), obj[b].kind) != e.family.end();
                if (src_in && dst_in && matches_pattern(step, e.pattern)) {
                    excluded = true;
                    break;
                }
            }
            if (excluded) continue;
            long dim = 1;
            if (c.model.name == "3-loop" && obj[a].kind == "Mxyz" && obj[b].kind == "k") dim = 2;
            arrows.push_back({static_cast<int>(a), static_cast<int>(b), dim});
        }

    if (!c.strong_variant && c.model.exps[0] == 2) {
        // the corner morphism of the non-strong layout lands in bracket zero
        // exactly when p = 2
        int src = -1, dst = -1;
        for (size_t i = 0; i < obj.size(); ++i) {
            if (obj[i].pos == std::vector<int>{0, -1, -1}) src = static_cast<int>(i);
            if (obj[i].pos == std::vector<int>{-1, -1, 0}) dst = static_cast<int>(i);
        }
        if (src >= 0 && dst >= 0) arrows.push_back({src, dst, 1});
    }
    std::sort(arrows.begin(), arrows.end(), [](const ExpectedArrow& x, const ExpectedArrow& y) {
        return std::tie(x.src, x.dst) < std::tie(y.src, y.dst);
    });
    return arrows;
}

ExceptionalCollection thom_sebastiani(const ExceptionalCollection& a, const ExceptionalCollection& b) {
    // variables of b are renamed to live after the variables of a
    const int na = a.model.nvars, nb = b.model.nvars;
    std::vector<long long> exps = a.model.exps;
    exps.insert(exps.end(), b.model.exps.begin(), b.model.exps.end());

    std::string name;
    if (a.model.name == "1-chain" && b.model.name == "1-chain") name = "2-split";
    else if (a.model.name == "2-split" && b.model.name == "1-chain") name = "3-split-a";
    else if (a.model.name == "2-chain" && b.model.name == "1-chain") name = "3-split-b";
    else if (a.model.name == "2-loop" && b.model.name == "1-chain") name = "3-split-c";
    else throw InputError("thom_sebastiani: unsupported combination");

    ExceptionalCollection c;
    c.model = make_case(name, exps);
    for (const auto& oa : a.objects)
        for (const auto& ob : b.objects) {
            CollectionObject o;
            auto comps = kind_components(oa.kind);
            for (auto comp : kind_components(ob.kind)) {
                for (int& v : comp) v += na;
                comps.push_back(comp);
            }
            // tensor over the field: components multiply pairwise; with one
            // factor supported at the origin this is just the union
            if (!kind_components(oa.kind).empty() && !kind_components(ob.kind).empty()) {
                comps.clear();
                for (const auto& ca : kind_components(oa.kind))
                    for (auto cb : kind_components(ob.kind)) {
                        auto merged = ca;
                        for (int v : cb) merged.push_back(v + na);
                        comps.push_back(merged);
                    }
            }
            o.kind = kind_name_from_components(comps);
            o.pos = oa.pos;
            o.pos.insert(o.pos.end(), ob.pos.begin(), ob.pos.end());
            o.twist = GVec(oa.twist);
            o.twist.resize(static_cast<size_t>(na + nb), 0);
            for (int i = 0; i < nb; ++i) o.twist[static_cast<size_t>(na + i)] = ob.twist[static_cast<size_t>(i)];
            o.homshift = oa.homshift + ob.homshift;
            c.objects.push_back(std::move(o));
        }
    std::sort(c.objects.begin(), c.objects.end(),
              [](const CollectionObject& x, const CollectionObject& y) { return x.pos < y.pos; });
    return c;
}

ExceptionalCollection conjectural_collection(const std::string& type, const std::vector<long long>& exps) {
    if (exps.size() != 4) throw InputError("conjectural collections are provided for four variables");
    std::string name = (type == "chain") ? "4-chain" : (type == "loop") ? "4-loop" : type;
    if (name != "4-chain" && name != "4-loop") throw InputError("conjectural_collection: chain or loop only");

    ExceptionalCollection c;
    c.model = make_case(name, exps);
    const GradingData& g = c.model.g;
    auto P = [&](int i) { return static_cast<int>(exps[static_cast<size_t>(i)]); };
    auto& obj = c.objects;

    add_box(obj, g, "k", {{0, P(0) - 2}, {0, P(1) - 2}, {0, P(2) - 2}, {0, P(3) - 2}});
    add_box(obj, g, "My", {{-1, P(0) - 2}, {-1, -1}, {0, P(2) - 2}, {0, P(3) - 2}});
    add_box(obj, g, "Mz", {{0, P(0) - 2}, {-1, P(1) - 2}, {-1, -1}, {0, P(3) - 2}});
    add_box(obj, g, "Mt", {{0, P(0) - 2}, {0, P(1) - 2}, {-1, P(2) - 2}, {-1, -1}});
    if (name == "4-chain") {
        add_box(obj, g, "M[yt]", {{-1, P(0) - 2}, {-1, -1}, {-1, P(2) - 2}, {-1, -1}});
    } else {
        add_box(obj, g, "Mx", {{-1, -1}, {0, P(1) - 2}, {0, P(2) - 2}, {-1, P(3) - 2}});
        // the two plane families share the corner, which carries their union
        add_box(obj, g, "M[xz]", {{-1, -1}, {-1, P(1) - 2}, {-1, -1}, {-1, P(3) - 2}});
        add_box(obj, g, "M[yt]", {{-1, P(0) - 2}, {-1, -1}, {-1, P(2) - 2}, {-1, -1}});
        std::vector<int> corner{-1, -1, -1, -1};
        obj.erase(std::remove_if(obj.begin(), obj.end(),
                                 [&](const CollectionObject& o) { return o.pos == corner; }),
                  obj.end());
        obj.push_back(make_object(g, "M[xz][yt]", corner));
    }
    std::sort(obj.begin(), obj.end(),
              [](const CollectionObject& x, const CollectionObject& y) { return x.pos < y.pos; });
    return c;
}

std::vector<std::pair<std::string, long>> kind_counts(const ExceptionalCollection& c) {
    std::map<std::string, long> m;
    for (const auto& o : c.objects) ++m[o.kind];
    return std::vector<std::pair<std::string, long>>(m.begin(), m.end());
}

}  // namespace mfkit
