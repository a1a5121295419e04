#include "belab/resolution.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace belab {

namespace {

// Deterministic stage layout: group by lead component, lex-descending lead
// monomials within a group (the arrangement behind the length bound in
// Schreyer's construction).
void sort_stage(const PolyRing& ring, std::vector<ModElement>& basis) {
    std::sort(basis.begin(), basis.end(), [&](const ModElement& a, const ModElement& b) {
        if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
        int c = cmp_lex(a.lead().mono, b.lead().mono, ring.nvars());
        if (c != 0) return c > 0;
        return cmp_degrevlex(a.lead().mono, b.lead().mono, ring.nvars()) > 0;
    });
}

FreeModuleOrder next_module_order(const FreeModuleOrder& fm, const std::vector<ModElement>& basis) {
    FreeModuleOrder next;
    next.weight.reserve(basis.size());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        const ModTerm& lt = basis[i].lead();
        next.weight.push_back(lt.wmono);
        next.twist.push_back(lt.mono.degree + fm.twist[lt.comp]);
        auto chain = fm.gene[lt.comp];
        chain.push_back(i);
        next.gene.push_back(std::move(chain));
    }
    return next;
}

}  // namespace

SyzygyStage stage_from_ring_gb(const PolyRing& ring, const std::vector<Polynomial>& gb) {
    SyzygyStage stage;
    FreeModuleOrder ring_fm = FreeModuleOrder::ring_module();
    for (const auto& g : gb) {
        std::vector<ModTerm> terms;
        terms.reserve(g.terms.size());
        for (const auto& t : g.terms) terms.push_back(make_term(ring_fm, t.coeff, 0, t.mono));
        stage.basis.push_back(mod_from_terms(ring, ring_fm, std::move(terms)));
    }
    sort_stage(ring, stage.basis);
    stage.fm = ring_fm;
    return stage;
}

SyzygyStage schreyer_syzygies(const PolyRing& ring, const SyzygyStage& stage, WorkBudget* budget) {
    const auto& basis = stage.basis;
    FreeModuleOrder next_fm = next_module_order(stage.fm, basis);

    // candidate pairs grouped by the smaller index i; LT(tau_ij) = (lcm/lt_i) e_i
    SyzygyStage out;
    out.fm = next_fm;
    int count = static_cast<int>(basis.size());
    for (int i = 0; i < count; ++i) {
        std::vector<std::pair<Monomial, int>> candidates;
        for (int j = i + 1; j < count; ++j) {
            if (basis[i].lead().comp != basis[j].lead().comp) continue;
            Monomial l = lcm(basis[i].lead().mono, basis[j].lead().mono);
            candidates.push_back({div(l, basis[i].lead().mono), j});
        }
        std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
            if (a.first.degree != b.first.degree) return a.first.degree < b.first.degree;
            int c = cmp(a.first, b.first, ring.nvars(), ring.order);
            if (c != 0) return c < 0;
            return a.second < b.second;
        });
        std::vector<Monomial> kept;
        for (const auto& [mono, j] : candidates) {
            bool redundant = false;
            for (const auto& k : kept)
                if (divides(k, mono)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            kept.push_back(mono);

            // tau = (lcm/lt_i) e_i - c (lcm/lt_j) e_j - sum q_nu e_nu
            const ModElement &gi = basis[i], &gj = basis[j];
            Monomial l = lcm(gi.lead().mono, gj.lead().mono);
            Monomial ui = div(l, gi.lead().mono), uj = div(l, gj.lead().mono);
            uint32_t ratio = ring.mul(gi.lead().coeff, ring.inv(gj.lead().coeff));
            ModElement spair = mod_submul(ring, stage.fm, ModElement{}, ring.characteristic - 1, ui, gi);
            spair = mod_submul(ring, stage.fm, spair, ratio, uj, gj);
            // spair = ui*gi - ratio*uj*gj
            std::vector<Polynomial> quotients(basis.size());
            ModElement rem = mod_normal_form(ring, stage.fm, spair, basis, &quotients, budget);
            if (!rem.is_zero()) throw std::logic_error("schreyer_syzygies: S-pair failed to reduce to zero");

            std::vector<ModTerm> terms;
            terms.push_back(make_term(next_fm, 1, static_cast<uint32_t>(i), ui));
            terms.push_back(make_term(next_fm, ring.neg(ratio), static_cast<uint32_t>(j), uj));
            for (int nu = 0; nu < static_cast<int>(basis.size()); ++nu)
                for (const auto& t : quotients[nu].terms)
                    terms.push_back(make_term(next_fm, ring.neg(t.coeff), static_cast<uint32_t>(nu), t.mono));
            out.basis.push_back(mod_from_terms(ring, next_fm, std::move(terms)));
        }
    }
    sort_stage(ring, out.basis);
    return out;
}

namespace {

GradedMatrix stage_to_matrix(const PolyRing& ring, const FreeModuleOrder& fm_target,
                             const std::vector<ModElement>& basis) {
    GradedMatrix m;
    m.target.rank = fm_target.rank();
    m.target.twists = fm_target.twist;
    m.source.rank = static_cast<int>(basis.size());
    for (int c = 0; c < m.source.rank; ++c) {
        const ModTerm& lt = basis[c].lead();
        m.source.twists.push_back(lt.mono.degree + fm_target.twist[lt.comp]);
    }
    m.cols.resize(basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
        std::map<int, std::vector<Term>> rows;
        for (const auto& t : basis[c].terms) rows[static_cast<int>(t.comp)].push_back({t.coeff, t.mono});
        for (auto& [r, terms] : rows) m.cols[c][r] = poly_from_terms(ring, terms);
    }
    return m;
}

}  // namespace

Resolution free_resolution(Ideal& ideal, int max_length, WorkBudget* budget) {
    const PolyRing& ring = ideal.ring;
    if (max_length < 0) max_length = ring.nvars() + 2;
    const auto& gb = buchberger(ideal, budget);

    Resolution res;
    res.ring = ring;
    if (gb.empty()) return res;

    SyzygyStage stage = stage_from_ring_gb(ring, gb);
    for (int s = 0; s < max_length && !stage.basis.empty(); ++s) {
        res.diffs.push_back(stage_to_matrix(ring, stage.fm, stage.basis));
        stage = schreyer_syzygies(ring, stage, budget);
    }
    if (!stage.basis.empty())
        throw BudgetExceeded("free_resolution: length cap reached before the resolution terminated");
    return res;
}

// ---- minimization -----------------------------------------------------------

namespace {

struct MinStage {
    // entries[c][r], plus a row -> columns index; dead rows/cols are erased
    std::vector<std::map<int, Polynomial>> cols;
    std::vector<std::set<int>> row_index;
    std::vector<bool> col_alive, row_alive;
    std::vector<int> src_twist, tgt_twist;
};

void put_entry(MinStage& st, int r, int c, Polynomial p) {
    auto& col = st.cols[c];
    if (p.is_zero()) {
        if (col.erase(r)) st.row_index[r].erase(c);
    } else {
        if (!col.count(r)) st.row_index[r].insert(c);
        col[r] = std::move(p);
    }
}

}  // namespace

MinimizeResult minimize(const Resolution& res) {
    const PolyRing& ring = res.ring;
    int length = res.length();
    std::vector<MinStage> stages(length);
    for (int s = 0; s < length; ++s) {
        const GradedMatrix& d = res.diffs[s];
        MinStage& st = stages[s];
        st.cols.resize(d.source.rank);
        st.row_index.resize(d.target.rank);
        st.col_alive.assign(d.source.rank, true);
        st.row_alive.assign(d.target.rank, true);
        st.src_twist = d.source.twists;
        st.tgt_twist = d.target.twists;
        for (int c = 0; c < d.source.rank; ++c)
            for (const auto& [r, p] : d.cols[c]) put_entry(st, r, c, p);
    }

    for (int s = 0; s < length; ++s) {
        MinStage& st = stages[s];
        while (true) {
            // pivot: smallest source twist, then (row, col) position
            int pr = -1, pc = -1;
            for (int c = 0; c < static_cast<int>(st.cols.size()); ++c) {
                if (!st.col_alive[c]) continue;
                if (pc != -1 && st.src_twist[c] > st.src_twist[pc]) continue;
                for (const auto& [r, p] : st.cols[c]) {
                    if (!st.row_alive[r] || st.src_twist[c] != st.tgt_twist[r]) continue;
                    if (p.is_zero() || !p.lead().mono.is_one()) continue;
                    if (pc == -1 || st.src_twist[c] < st.src_twist[pc] ||
                        (st.src_twist[c] == st.src_twist[pc] && std::make_pair(r, c) < std::make_pair(pr, pc))) {
                        pr = r;
                        pc = c;
                    }
                    break;  // rows in a column are sorted; first unit row is the best in this column
                }
            }
            if (pc == -1) break;

            uint32_t unit = stages[s].cols[pc].at(pr).lead().coeff;
            uint32_t unit_inv = ring.inv(unit);
            // column ops: clear row pr outside pc
            std::vector<int> touched(st.row_index[pr].begin(), st.row_index[pr].end());
            std::map<int, Polynomial> pivot_col = st.cols[pc];
            for (int c2 : touched) {
                if (c2 == pc || !st.col_alive[c2]) continue;
                Polynomial lambda = scale(ring, st.cols[c2].at(pr), ring.neg(unit_inv));
                for (const auto& [r2, p] : pivot_col) {
                    if (!st.row_alive[r2]) continue;
                    auto it = st.cols[c2].find(r2);
                    Polynomial current = it == st.cols[c2].end() ? Polynomial{} : it->second;
                    put_entry(st, r2, c2, add(ring, current, mul(ring, lambda, p)));
                }
            }
            // delete column pc and row pr here, row pc upstream, column pr downstream
            for (const auto& [r2, p] : pivot_col)
                if (st.cols[pc].count(r2)) st.row_index[r2].erase(pc);
            st.cols[pc].clear();
            for (int c2 : std::vector<int>(st.row_index[pr].begin(), st.row_index[pr].end())) {
                st.cols[c2].erase(pr);
            }
            st.row_index[pr].clear();
            st.col_alive[pc] = false;
            st.row_alive[pr] = false;
            if (s + 1 < length) {
                MinStage& up = stages[s + 1];
                for (int c2 : std::vector<int>(up.row_index[pc].begin(), up.row_index[pc].end()))
                    up.cols[c2].erase(pc);
                up.row_index[pc].clear();
                up.row_alive[pc] = false;
            }
            if (s > 0) {
                MinStage& down = stages[s - 1];
                if (down.col_alive[pr]) {
                    for (const auto& [r2, p] : down.cols[pr]) down.row_index[r2].erase(pr);
                    down.cols[pr].clear();
                    down.col_alive[pr] = false;
                }
            }
        }
    }

    // compact into a fresh resolution
    MinimizeResult result;
    result.resolution.ring = ring;
    result.betti.n = ring.n;
    result.betti.characteristic = ring.characteristic;
    result.betti.order = ring.order;
    result.betti.entries[{0, 0}] = 1;

    std::vector<std::vector<int>> new_index(length + 1);
    new_index[0] = {0};  // F_0 = S survives untouched
    for (int s = 0; s < length; ++s) {
        const MinStage& st = stages[s];
        std::vector<int> idx(st.cols.size(), -1);
        int next = 0;
        for (int c = 0; c < static_cast<int>(st.cols.size()); ++c)
            if (st.col_alive[c]) idx[c] = next++;
        new_index[s + 1] = idx;
    }

    for (int s = 0; s < length; ++s) {
        const MinStage& st = stages[s];
        GradedMatrix m;
        for (int c = 0; c < static_cast<int>(st.cols.size()); ++c)
            if (st.col_alive[c]) m.source.twists.push_back(st.src_twist[c]);
        if (s == 0) {
            m.target.twists = {0};
        } else {
            const MinStage& prev = stages[s - 1];
            for (int r = 0; r < static_cast<int>(prev.cols.size()); ++r)
                if (prev.col_alive[r]) m.target.twists.push_back(prev.src_twist[r]);
        }
        m.source.rank = static_cast<int>(m.source.twists.size());
        m.target.rank = static_cast<int>(m.target.twists.size());
        m.cols.resize(m.source.rank);
        for (int c = 0; c < static_cast<int>(st.cols.size()); ++c) {
            if (!st.col_alive[c]) continue;
            for (const auto& [r, p] : st.cols[c]) {
                if (s > 0 && !stages[s - 1].col_alive[r]) continue;
                int rr = (s == 0) ? 0 : new_index[s][r];
                m.cols[new_index[s + 1][c]][rr] = p;
            }
        }
        if (m.source.rank == 0) break;
        result.resolution.diffs.push_back(std::move(m));
    }
    result.resolution.minimal = true;

    for (int s = 0; s < result.resolution.length(); ++s)
        for (int twist : result.resolution.diffs[s].source.twists) ++result.betti.entries[{s + 1, twist}];

    if (!check_complex(result.resolution) || !check_minimality(result.resolution) ||
        !check_graded(result.resolution))
        throw std::logic_error("minimize: result failed complex/minimality re-verification");
    return result;
}

bool check_complex(const Resolution& res) {
    const PolyRing& ring = res.ring;
    for (int s = 0; s + 1 < res.length(); ++s) {
        const GradedMatrix &a = res.diffs[s], &b = res.diffs[s + 1];
        if (a.source.rank != b.target.rank) return false;
        for (int c = 0; c < b.source.rank; ++c) {
            std::map<int, Polynomial> acc;
            for (const auto& [mid, q] : b.cols[c]) {
                auto it = a.cols.begin() + mid;
                for (const auto& [r, p] : *it) {
                    auto cur = acc.find(r);
                    Polynomial sum = mul(ring, p, q);
                    if (cur == acc.end())
                        acc[r] = sum;
                    else
                        cur->second = add(ring, cur->second, sum);
                }
            }
            for (const auto& [r, p] : acc)
                if (!p.is_zero()) return false;
        }
    }
    return true;
}

bool check_minimality(const Resolution& res) {
    for (const auto& d : res.diffs)
        for (const auto& col : d.cols)
            for (const auto& [r, p] : col)
                if (!p.is_zero() && p.terms.back().mono.is_one()) return false;
    return true;
}

bool check_graded(const Resolution& res) {
    for (const auto& d : res.diffs)
        for (int c = 0; c < d.source.rank; ++c)
            for (const auto& [r, p] : d.cols[c]) {
                if (p.is_zero()) continue;
                int expected = d.source.twists[c] - d.target.twists[r];
                for (const auto& t : p.terms)
                    if (t.mono.degree != expected) return false;
            }
    return true;
}

DerivedInvariants derived_invariants(const BettiTable& bt, const PolyRing& ring, int dim) {
    if (bt.entries.empty()) throw std::invalid_argument("derived_invariants: empty table");
    DerivedInvariants inv;
    inv.dim = dim;
    for (const auto& [key, value] : bt.entries) {
        if (value == 0) continue;
        inv.pd = std::max(inv.pd, key.first);
        inv.reg = std::max(inv.reg, key.second - key.first);
    }
    inv.depth = 2 * ring.n - inv.pd;
    // extremal = staircase corners straight from the definition
    for (const auto& [key, value] : bt.entries) {
        if (value == 0) continue;
        auto [i, j] = key;
        int jj = j - i;
        bool extremal = true;
        for (const auto& [other, ov] : bt.entries) {
            if (ov == 0 || other == key) continue;
            auto [k, l] = other;
            if (k >= i && l - k >= jj) {
                extremal = false;
                break;
            }
        }
        if (extremal) inv.extremal.push_back(key);
    }
    for (const auto& [key, value] : bt.entries) {
        if (value == 0) continue;
        if (key.first == inv.pd && key.second >= inv.corner_pd.second) inv.corner_pd = key;
        if (key.second - key.first == inv.reg && key.first >= inv.corner_reg.first) inv.corner_reg = key;
    }
    inv.unique_extremal = bt.beta(inv.pd, inv.pd + inv.reg) > 0;
    return inv;
}

BiPoly betti_polynomial(const BettiTable& bt) {
    BiPoly p;
    for (const auto& [key, value] : bt.entries)
        if (value) p[key] += value;
    return p;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

std::string bipoly_to_string(const BiPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [key, value] : p) {
        if (!out.empty()) out += " + ";
        out += std::to_string(value);
        if (key.first) out += "*s^" + std::to_string(key.first);
        if (key.second) out += "*t^" + std::to_string(key.second);
    }
    return out;
}

bool hilbert_consistency_check(const BettiTable& bt, Ideal& ideal, WorkBudget* budget) {
    IntPoly alternating;
    for (const auto& [key, value] : bt.entries) {
        if (!value) continue;
        IntPoly term(key.second + 1, 0);
        term[key.second] = (key.first % 2 == 0) ? value : -value;
        alternating = intpoly_add(alternating, term);
    }
    IntPoly numerator = hilbert_numerator(initial_ideal(ideal, budget), ideal.ring.nvars());
    return alternating == numerator;
}

std::string BettiTable::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["char"] = characteristic;
    j["order"] = order == MonomialOrder::degrevlex ? "degrevlex" : "lex";
    auto arr = nlohmann::json::array();
    for (const auto& [key, value] : entries) {
        if (!value) continue;
        arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
    }
    j["table"] = arr;
    return j.dump();
}

std::string BettiTable::to_display_string() const {
    int max_i = 0, max_slope = 0;
    for (const auto& [key, value] : entries) {
        if (!value) continue;
        max_i = std::max(max_i, key.first);
        max_slope = std::max(max_slope, key.second - key.first);
    }
    auto width_of = [](int64_t v) { return std::to_string(v).size(); };
    std::vector<size_t> width(max_i + 1, 1);
    for (int i = 0; i <= max_i; ++i) {
        width[i] = std::max(width[i], width_of(i));
        for (int s = 0; s <= max_slope; ++s) width[i] = std::max(width[i], width_of(beta(i, i + s)));
    }
    auto cell = [](const std::string& text, size_t w) {
        return std::string(w > text.size() ? w - text.size() : 0, ' ') + text;
    };
    std::string out = "    ";
    for (int i = 0; i <= max_i; ++i) out += " " + cell(std::to_string(i), width[i]);
    out += "\n";
    for (int s = 0; s <= max_slope; ++s) {
        out += cell(std::to_string(s), 3) + ":";
        for (int i = 0; i <= max_i; ++i) {
            int64_t b = beta(i, i + s);
            out += " " + cell(b ? std::to_string(b) : ".", width[i]);
        }
        out += "\n";
    }
    return out;
}

BettiTable BettiTable::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BettiTable bt;
    bt.n = j.at("n").get<int>();
    bt.characteristic = j.at("char").get<uint32_t>();
    bt.order = j.at("order").get<std::string>() == "lex" ? MonomialOrder::lex : MonomialOrder::degrevlex;
    for (const auto& e : j.at("table"))
        bt.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<int64_t>();
    return bt;
}

}  // namespace belab
