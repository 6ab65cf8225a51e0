#include "equifront/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "equifront/invariants.hpp"

namespace equifront {

SearchBudget SearchBudget::from_env() {
    SearchBudget b;
    if (const char* e = std::getenv("EQUIFRONT_BUDGET")) {
        long long v = std::atoll(e);
        if (v > 0) b.max_nodes = v;
    }
    return b;
}

namespace {

std::string word_key(const FrontWord& w) {
    std::string s;
    for (auto& c : w.cols) {
        s += col_token(c);
        s += ';';
    }
    return s;
}

int max_strands(const FrontWord& w) {
    int k = 0, m = 0;
    for (auto& c : w.cols) {
        k += col_delta(c);
        m = std::max(m, k);
    }
    return m;
}

}  // namespace

std::string emit_certificate(const Certificate& c) {
    std::ostringstream os;
    os << "certificate v1 " << c.steps.size() << "\n";
    os << "start " << c.start.cols.size() << "\n" << emit_front(c.start);
    os << "end " << c.end.cols.size() << "\n" << emit_front(c.end);
    for (auto& s : c.steps) {
        if (s.kind == CertStep::Move)
            os << "move " << s.move.rule << " " << (s.move.forward ? "fwd" : "bwd") << " "
               << s.move.at << " " << s.move.offset << "\n";
        else
            os << "stabilize " << s.cusp_col << " " << (s.stab == StabKind::S ? "S" : "T") << "\n";
    }
    return os.str();
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty certificate", 0);
    std::istringstream hs(line);
    std::string magic, ver;
    size_t nsteps;
    if (!(hs >> magic >> ver >> nsteps) || magic != "certificate" || ver != "v1")
        throw ParseError("expected 'certificate v1 <n>'", 1);
    auto read_word = [&](const std::string& tag) {
        if (!std::getline(is, line)) throw ParseError("missing " + tag, 0);
        std::istringstream ts(line);
        std::string t;
        size_t n;
        if (!(ts >> t >> n) || t != tag) throw ParseError("expected '" + tag + " <n>'", 0);
        std::string block;
        std::getline(is, block);  // frontword header
        std::string body = block + "\n";
        size_t want = n;
        std::istringstream head(block);
        std::string m, v;
        size_t cols;
        if (!(head >> m >> v >> cols)) throw ParseError("bad embedded word", 0);
        for (size_t i = 0; i < cols; ++i) {
            std::getline(is, block);
            body += block + "\n";
        }
        (void)want;
        return parse_front(body);
    };
    Certificate c;
    c.start = read_word("start");
    c.end = read_word("end");
    for (size_t i = 0; i < nsteps; ++i) {
        if (!std::getline(is, line)) throw ParseError("truncated certificate", 0);
        std::istringstream ts(line);
        std::string kind;
        ts >> kind;
        if (kind == "move") {
            CertStep s;
            std::string rule, dir;
            if (!(ts >> rule >> dir >> s.move.at >> s.move.offset))
                throw ParseError("bad move line '" + line + "'", 0);
            s.move.rule = rule;
            s.move.forward = dir == "fwd";
            c.steps.push_back(s);
        } else if (kind == "stabilize") {
            CertStep s;
            s.kind = CertStep::Stabilize;
            std::string k;
            if (!(ts >> s.cusp_col >> k)) throw ParseError("bad stabilize line", 0);
            s.stab = k == "S" ? StabKind::S : StabKind::T;
            c.steps.push_back(s);
        } else {
            throw ParseError("unknown certificate step '" + line + "'", 0);
        }
    }
    return c;
}

FrontWord replay(const Certificate& c) {
    FrontWord w = canonical_form(c.start);
    for (auto& s : c.steps) {
        if (s.kind == CertStep::Move)
            w = canonical_form(apply(w, s.move));
        else
            w = canonical_form(stabilize_link(w, s.cusp_col, s.stab).word);
    }
    if (!canonically_equal(w, c.end))
        throw NotApplicable("certificate replay does not reach the stated endpoint");
    return w;
}

namespace {

struct Node {
    FrontWord word;
    std::string parent_key;
    MoveApplication via;
    bool has_via = false;
};

std::optional<std::string> refute(const FrontWord& a, const FrontWord& b) {
    auto ra = validate(a), rb = validate(b);
    if (ra.component_count != rb.component_count) return "component counts differ";
    if (ra.component_count == 1) {
        if (thurston_bennequin(a) != thurston_bennequin(b)) return "tb differs";
        if (jones_in_A(a) != jones_in_A(b)) return "bracket differs";
    }
    if (a.anchor && b.anchor) {
        if (anchored_rotation(a, *a.anchor) != anchored_rotation(b, *b.anchor))
            return "anchored rotation differs at the marked cusps";
    } else {
        std::multiset<int> ma, mb;
        for (auto& [col, v] : invariants(a).rot_anchored) ma.insert(v);
        for (auto& [col, v] : invariants(b).rot_anchored) mb.insert(v);
        if (ma != mb) return "anchored rotation profiles differ";
    }
    return std::nullopt;
}

}  // namespace

SearchOutcome equivalent(const FrontWord& a, const FrontWord& b, const SearchBudget& budget,
                         int threads) {
    (void)threads;  // expansion order is deterministic; parallel callers share results
    require_valid(a);
    require_valid(b);
    SearchOutcome out;
    if (auto r = refute(a, b)) {
        out.kind = SearchOutcome::Refuted;
        out.refutation = *r;
        return out;
    }
    FrontWord ca = canonical_form(a), cb = canonical_form(b);
    ca.anchor.reset();
    cb.anchor.reset();
    long long nodes = 0;
    for (int growth : budget.growth_schedule) {
        for (int window : budget.window_schedule) {
            MoveOptions opt{growth, window};
            std::map<std::string, Node> seen[2];
            std::deque<std::string> frontier[2];
            std::string ka = word_key(ca), kb = word_key(cb);
            seen[0][ka] = {ca, "", {}, false};
            seen[1][kb] = {cb, "", {}, false};
            frontier[0].push_back(ka);
            frontier[1].push_back(kb);

            auto build_path = [&](int side, std::string key) {
                // walk to the root of `side`, returning words along the way
                std::vector<std::pair<std::string, MoveApplication>> edges;
                std::vector<std::string> keys;
                while (true) {
                    keys.push_back(key);
                    const Node& n = seen[side][key];
                    if (!n.has_via) break;
                    edges.push_back({n.parent_key, n.via});
                    key = n.parent_key;
                }
                return std::make_pair(keys, edges);
            };

            std::optional<std::string> meet;
            while (!frontier[0].empty() && !frontier[1].empty() && !meet) {
                int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
                size_t wave = frontier[side].size();
                for (size_t t = 0; t < wave && !meet; ++t) {
                    std::string key = frontier[side].front();
                    frontier[side].pop_front();
                    FrontWord w = seen[side][key].word;
                    if (++nodes > budget.max_nodes) goto budget_out;
                    auto apps = applicable_moves(w, opt);
                    for (auto& app : apps) {
                        FrontWord nw;
                        try {
                            nw = canonical_form(apply(w, app));
                        } catch (const std::exception&) {
                            continue;
                        }
                        if (static_cast<int>(nw.cols.size()) > budget.max_columns) continue;
                        if (max_strands(nw) > budget.max_above_strands) continue;
                        nw.anchor.reset();
                        std::string nk = word_key(nw);
                        if (seen[side].count(nk)) continue;
                        seen[side][nk] = {nw, key, app, true};
                        frontier[side].push_back(nk);
                        if (seen[1 - side].count(nk)) {
                            meet = nk;
                            break;
                        }
                    }
                }
            }
        budget_out:
            out.nodes += nodes;
            if (!meet) continue;

            // assemble the certificate: a -> meet, then meet -> b
            Certificate cert;
            cert.start = a;
            cert.end = b;
            auto [keys0, edges0] = build_path(0, *meet);
            // edges0 lead from meet back to a; reverse into forward steps
            std::vector<MoveApplication> fwd;
            for (auto it = edges0.rbegin(); it != edges0.rend(); ++it) fwd.push_back(it->second);
            for (auto& m : fwd) {
                CertStep s;
                s.move = m;
                cert.steps.push_back(s);
            }
            // b side: walk meet -> b inverting each stored edge
            auto [keys1, edges1] = build_path(1, *meet);
            FrontWord cur = seen[1][*meet].word;
            for (auto& [pkey, via] : edges1) {
                FrontWord parent = seen[1][pkey].word;
                // find an application turning cur into parent
                bool found = false;
                for (auto& app : applicable_moves(cur, opt)) {
                    FrontWord nw;
                    try {
                        nw = canonical_form(apply(cur, app));
                    } catch (const std::exception&) {
                        continue;
                    }
                    if (nw.cols == parent.cols) {
                        CertStep s;
                        s.move = app;
                        cert.steps.push_back(s);
                        cur = parent;
                        found = true;
                        break;
                    }
                }
                if (!found) throw NotApplicable("internal: could not invert a search edge");
            }
            out.kind = SearchOutcome::Equivalent;
            out.certificate = cert;
            return out;
        }
    }
    return out;
}

SearchOutcome equivalent_after_S_stabilizations(const FrontWord& a, const FrontWord& b,
                                                int max_stabs, const SearchBudget& budget) {
    require_valid(a);
    require_valid(b);
    SearchOutcome out;
    auto ra = validate(a), rb = validate(b);
    if (ra.component_count == 1 && rb.component_count == 1 && jones_in_A(a) != jones_in_A(b)) {
        out.kind = SearchOutcome::Refuted;
        out.refutation = "bracket differs";
        return out;
    }
    // all stabilization sequences of length up to max_stabs
    struct Variant {
        FrontWord word;
        std::vector<CertStep> steps;
    };
    auto grow = [&](const FrontWord& w) {
        std::vector<std::vector<Variant>> levels{{Variant{w, {}}}};
        for (int s = 1; s <= max_stabs; ++s) {
            std::vector<Variant> next;
            std::set<std::string> dedupe;
            for (auto& v : levels.back()) {
                for (size_t col = 0; col < v.word.cols.size(); ++col) {
                    if (!v.word.cols[col].is_axis_cusp()) continue;
                    auto res = stabilize_link(v.word, static_cast<int>(col), StabKind::S);
                    std::string k = word_key(canonical_form(res.word));
                    if (!dedupe.insert(k).second) continue;
                    Variant nv;
                    nv.word = res.word;
                    nv.steps = v.steps;
                    CertStep st;
                    st.kind = CertStep::Stabilize;
                    st.cusp_col = static_cast<int>(col);
                    st.stab = StabKind::S;
                    nv.steps.push_back(st);
                    next.push_back(std::move(nv));
                }
            }
            levels.push_back(std::move(next));
        }
        return levels;
    };
    auto la = grow(a), lb = grow(b);
    for (int sa = 0; sa <= max_stabs; ++sa) {
        for (int sb = 0; sb <= max_stabs; ++sb) {
            for (auto& va : la[sa]) {
                for (auto& vb : lb[sb]) {
                    if (validate(va.word).component_count == 1 &&
                        validate(vb.word).component_count == 1 &&
                        thurston_bennequin(va.word) != thurston_bennequin(vb.word))
                        continue;
                    SearchOutcome eq = equivalent(va.word, vb.word, budget);
                    out.nodes += eq.nodes;
                    if (eq.kind != SearchOutcome::Equivalent) continue;
                    Certificate cert;
                    cert.start = a;
                    cert.end = b;
                    cert.steps = va.steps;
                    for (auto& s : eq.certificate->steps) cert.steps.push_back(s);
                    // append vb's stabilizations would break replay toward b, so
                    // only accept variants where b was not stabilized unless the
                    // search target matches b itself
                    if (!vb.steps.empty()) {
                        cert.end = vb.word;
                    }
                    out.kind = SearchOutcome::Equivalent;
                    out.certificate = cert;
                    return out;
                }
            }
        }
    }
    return out;
}

MaxTbResult max_tb_experiment(const Laurent& target_jones_A, const SearchBudget& budget) {
    MaxTbResult res;
    std::vector<Column> alphabet_cache;
    for (int len = 2; len <= budget.max_columns; ++len) {
        std::vector<Column> cur;
        long long before = res.nodes;
        bool out_of_budget = false;
        auto rec = [&](auto&& self, int k) -> void {
            if (out_of_budget) return;
            if (++res.nodes > budget.max_nodes) {
                out_of_budget = true;
                return;
            }
            int rem = len - static_cast<int>(cur.size());
            if (rem == 0) {
                if (k != 0) return;
                FrontWord w;
                w.cols = cur;
                auto r = validate(w);
                if (!r.valid || r.component_count != 1) return;
                try {
                    if (jones_in_A(w) != target_jones_A) return;
                    int tb = thurston_bennequin(w);
                    if (!res.found || tb > res.best_tb) {
                        res.found = true;
                        res.best_tb = tb;
                        res.witness = w;
                    }
                } catch (const std::exception&) {
                }
                return;
            }
            if (k > 2 * rem) return;  // cannot close any more
            auto push = [&](Column c) {
                if (k + col_delta(c) > budget.max_above_strands) return;
                cur.push_back(c);
                self(self, k + col_delta(c));
                cur.pop_back();
            };
            push({ColKind::AxisCuspL, 0});
            if (k >= 1) push({ColKind::AxisCuspR, 0});
            if (k >= 1) push({ColKind::AxisCross, 0});
            for (int l = 1; l <= k + 1; ++l) push({ColKind::PairCuspL, l});
            for (int l = 1; l + 1 <= k; ++l) push({ColKind::PairCuspR, l});
            for (int l = 1; l + 1 <= k; ++l) push({ColKind::PairCross, l});
        };
        rec(rec, 0);
        (void)before;
        if (out_of_budget) {
            res.budget_exhausted = true;
            break;
        }
    }
    return res;
}

}  // namespace equifront
