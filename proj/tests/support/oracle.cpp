#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace mel::oracle {

namespace {

using Table = std::vector<std::vector<bool>>;

bool in(const Interval& iv, std::uint64_t d) {
    if (d < iv.lower()) return false;
    return iv.is_unbounded() || d < iv.upper();
}

Table build(const Trace& m, const Formula& f) {
    const std::size_t n = m.time.size();
    Table t(2, std::vector<bool>(n, false));
    if (f.op() == Op::Bottom) return t;
    if (f.op() == Op::Atom) {
        const auto it = std::find(m.atoms.begin(), m.atoms.end(), f.name());
        if (it == m.atoms.end()) return t;
        const auto bit = static_cast<std::uint32_t>(1U << (it - m.atoms.begin()));
        for (std::size_t k = 0; k < n; ++k) {
            t[0][k] = (m.here[k] & bit) != 0;
            t[1][k] = (m.there[k] & bit) != 0;
        }
        return t;
    }
    if (f.op() == Op::Next || f.op() == Op::Prev) {
        const Table a = build(m, f.operand());
        for (int w = 0; w < 2; ++w)
            for (std::size_t k = 0; k < n; ++k) {
                if (f.op() == Op::Next)
                    t[w][k] = k + 1 < n && in(f.interval(), m.time[k + 1] - m.time[k]) && a[w][k + 1];
                else
                    t[w][k] = k >= 1 && in(f.interval(), m.time[k] - m.time[k - 1]) && a[w][k - 1];
            }
        return t;
    }
    const Table a = build(m, f.lhs());
    const Table b = build(m, f.rhs());
    for (int w = 0; w < 2; ++w) {
        for (std::size_t k = 0; k < n; ++k) {
            bool v = false;
            switch (f.op()) {
                case Op::And: v = a[w][k] && b[w][k]; break;
                case Op::Or: v = a[w][k] || b[w][k]; break;
                case Op::Implies:
                    v = (!a[1][k] || b[1][k]) && (w == 1 || !a[0][k] || b[0][k]);
                    break;
                case Op::Until:
                case Op::Release: {
                    // For each candidate j: lhs on every i in [k, j)?
                    const bool until = f.op() == Op::Until;
                    v = !until;
                    for (std::size_t j = k; j < n; ++j) {
                        if (!in(f.interval(), m.time[j] - m.time[k])) continue;
                        bool all_lhs = true, some_lhs = false;
                        for (std::size_t i = k; i < j; ++i) {
                            all_lhs = all_lhs && a[w][i];
                            some_lhs = some_lhs || a[w][i];
                        }
                        if (until && b[w][j] && all_lhs) v = true;
                        if (!until && !b[w][j] && !some_lhs) v = false;
                    }
                    break;
                }
                case Op::Since:
                case Op::Trigger: {
                    const bool since = f.op() == Op::Since;
                    v = !since;
                    for (std::size_t j = 0; j <= k; ++j) {
                        if (!in(f.interval(), m.time[k] - m.time[j])) continue;
                        bool all_lhs = true, some_lhs = false;
                        for (std::size_t i = j + 1; i <= k; ++i) {
                            all_lhs = all_lhs && a[w][i];
                            some_lhs = some_lhs || a[w][i];
                        }
                        if (since && b[w][j] && all_lhs) v = true;
                        if (!since && !b[w][j] && !some_lhs) v = false;
                    }
                    break;
                }
                default: break;
            }
            t[w][k] = v;
        }
    }
    return t;
}

}  // namespace

std::vector<std::vector<bool>> truth_table(const Trace& m, const Formula& f) { return build(m, f); }

bool holds(const Trace& m, const Formula& f, std::size_t k) { return build(m, f)[0][k]; }

bool models(const Trace& m, const std::vector<Formula>& theory) {
    return std::all_of(theory.begin(), theory.end(), [&](const Formula& f) { return holds(m, f, 0); });
}

std::vector<Trace> all_traces(const std::vector<std::string>& atoms, std::size_t max_len,
                              std::uint64_t max_time) {
    std::vector<Trace> out;
    const std::uint32_t sets = 1U << atoms.size();
    // Pairs (H, T) with H a subset of T.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> worlds;
    for (std::uint32_t t = 0; t < sets; ++t)
        for (std::uint32_t h = 0; h < sets; ++h)
            if ((h & ~t) == 0) worlds.emplace_back(h, t);

    for (std::size_t len = 1; len <= max_len; ++len) {
        // Time maps: 0 followed by len-1 strictly increasing values <= max_time.
        std::vector<std::vector<std::uint64_t>> maps{{0}};
        for (std::size_t step = 1; step < len; ++step) {
            std::vector<std::vector<std::uint64_t>> grown;
            for (const auto& mp : maps)
                for (std::uint64_t v = mp.back() + 1; v <= max_time; ++v) {
                    auto c = mp;
                    c.push_back(v);
                    grown.push_back(std::move(c));
                }
            maps = std::move(grown);
        }
        for (const auto& mp : maps) {
            std::vector<std::size_t> pick(len, 0);
            while (true) {
                Trace tr;
                tr.atoms = atoms;
                tr.time = mp;
                for (std::size_t i = 0; i < len; ++i) {
                    tr.here.push_back(worlds[pick[i]].first);
                    tr.there.push_back(worlds[pick[i]].second);
                }
                out.push_back(std::move(tr));
                std::size_t i = 0;
                while (i < len && ++pick[i] == worlds.size()) pick[i++] = 0;
                if (i == len) break;
            }
        }
    }
    return out;
}

bool equivalent(const std::vector<Formula>& a, const std::vector<Formula>& b,
                const std::vector<std::string>& atoms, std::size_t max_len, std::uint64_t max_time) {
    for (const auto& m : all_traces(atoms, max_len, max_time))
        if (models(m, a) != models(m, b)) return false;
    return true;
}

}  // namespace mel::oracle
