#include "colouring_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey::detail {

namespace {

// Literal 2v is "x_v true", 2v+1 is "x_v false".
int make_lit(int var, bool negated) { return 2 * var + (negated ? 1 : 0); }
int var_of(int lit) { return lit >> 1; }

constexpr signed char kUnassigned = -1;
constexpr int kNoReason = -1;

double luby(double y, std::uint64_t x) {
    std::uint64_t size = 1;
    int seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x %= size;
    }
    return std::pow(y, seq);
}

// Max-heap of variables by activity; ties go to the smaller index.
class VarHeap {
public:
    explicit VarHeap(const std::vector<double>& activity) : act_(activity), pos_(activity.size(), -1) {}

    bool empty() const { return heap_.empty(); }
    bool contains(int v) const { return pos_[static_cast<std::size_t>(v)] >= 0; }

    void insert(int v) {
        if (contains(v)) return;
        pos_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        up(heap_.size() - 1);
    }

    void increased(int v) {
        if (contains(v)) up(static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)]));
    }

    int pop() {
        const int top = heap_.front();
        pos_[static_cast<std::size_t>(top)] = -1;
        heap_.front() = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            pos_[static_cast<std::size_t>(heap_.front())] = 0;
            down(0);
        }
        return top;
    }

private:
    bool before(int a, int b) const {
        const double x = act_[static_cast<std::size_t>(a)], y = act_[static_cast<std::size_t>(b)];
        return x > y || (x == y && a < b);
    }

    void place(std::size_t i, int v) {
        heap_[i] = v;
        pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }

    void up(std::size_t i) {
        const int v = heap_[i];
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!before(v, heap_[parent])) break;
            place(i, heap_[parent]);
            i = parent;
        }
        place(i, v);
    }

    void down(std::size_t i) {
        const int v = heap_[i];
        for (;;) {
            std::size_t child = 2 * i + 1;
            if (child >= heap_.size()) break;
            if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) ++child;
            if (!before(heap_[child], v)) break;
            place(i, heap_[child]);
            i = child;
        }
        place(i, v);
    }

    const std::vector<double>& act_;
    std::vector<int> pos_;
    std::vector<int> heap_;
};

class Solver {
public:
    enum class Result { sat, unsat, budget, restart };

    Solver(int vars, std::vector<double> initial_activity)
        : value_(static_cast<std::size_t>(vars), kUnassigned), level_(static_cast<std::size_t>(vars), 0),
          reason_(static_cast<std::size_t>(vars), kNoReason), activity_(std::move(initial_activity)),
          phase_(static_cast<std::size_t>(vars), 0), seen_(static_cast<std::size_t>(vars), 0),
          watches_(2 * static_cast<std::size_t>(vars)), heap_(activity_) {
        for (int v = 0; v < vars; ++v) heap_.insert(v);
    }

    // Only valid before search starts (decision level 0).
    void add_clause(std::vector<int> lits) {
        if (unsat_) return;
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        std::vector<int> kept;
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (i + 1 < lits.size() && lits[i + 1] == (lits[i] ^ 1)) return;
            const int val = lit_value(lits[i]);
            if (val == 1) return;
            if (val == kUnassigned) kept.push_back(lits[i]);
        }
        if (kept.empty()) {
            unsat_ = true;
        } else if (kept.size() == 1) {
            enqueue(kept[0], kNoReason);
            if (propagate() != kNoReason) unsat_ = true;
        } else {
            attach(std::move(kept), false);
        }
    }

    Result solve(std::uint64_t budget) {
        if (unsat_) return Result::unsat;
        if (propagate() != kNoReason) return Result::unsat;
        max_learnts_ = std::max<double>(2000.0, static_cast<double>(clauses_.size()) / 2.0);
        for (std::uint64_t restart = 0;; ++restart) {
            const auto limit = static_cast<std::uint64_t>(luby(2.0, restart) * 100.0);
            const Result r = search(limit, budget);
            if (r != Result::restart) return r;
            cancel_until(0);
        }
    }

    bool model_value(int var) const { return value_[static_cast<std::size_t>(var)] == 1; }
    std::uint64_t decisions() const { return decisions_; }
    std::uint64_t conflicts() const { return conflicts_; }

private:
    struct Clause {
        std::vector<int> lits;
        double activity = 0.0;
        bool learnt = false;
        bool removed = false;
    };

    int lit_value(int lit) const {
        const signed char v = value_[static_cast<std::size_t>(var_of(lit))];
        return v == kUnassigned ? kUnassigned : (v ^ (lit & 1));
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    int attach(std::vector<int> lits, bool learnt) {
        const int idx = static_cast<int>(clauses_.size());
        watches_[static_cast<std::size_t>(lits[0])].push_back(idx);
        watches_[static_cast<std::size_t>(lits[1])].push_back(idx);
        clauses_.push_back(Clause{std::move(lits), 0.0, learnt, false});
        if (learnt) ++learnt_count_;
        return idx;
    }

    void enqueue(int lit, int reason) {
        const auto v = static_cast<std::size_t>(var_of(lit));
        value_[v] = static_cast<signed char>((lit & 1) ? 0 : 1);
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(lit);
    }

    // Returns the index of a conflicting clause, or kNoReason.
    int propagate() {
        while (qhead_ < trail_.size()) {
            const int false_lit = trail_[qhead_++] ^ 1;
            std::vector<int>& ws = watches_[static_cast<std::size_t>(false_lit)];
            std::size_t i = 0, j = 0;
            while (i < ws.size()) {
                const int ci = ws[i++];
                Clause& c = clauses_[static_cast<std::size_t>(ci)];
                if (c.removed) continue;
                std::vector<int>& lits = c.lits;
                if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
                if (lit_value(lits[0]) == 1) {
                    ws[j++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < lits.size(); ++k) {
                    if (lit_value(lits[k]) != 0) {
                        std::swap(lits[1], lits[k]);
                        watches_[static_cast<std::size_t>(lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[j++] = ci;
                if (lit_value(lits[0]) == 0) {
                    while (i < ws.size()) ws[j++] = ws[i++];
                    ws.resize(j);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(lits[0], ci);
            }
            ws.resize(j);
        }
        return kNoReason;
    }

    void bump_var(int v) {
        auto& a = activity_[static_cast<std::size_t>(v)];
        a += var_inc_;
        if (a > 1e100) {
            for (double& x : activity_) x *= 1e-100;
            var_inc_ *= 1e-100;
        }
        heap_.increased(v);
    }

    void bump_clause(Clause& c) {
        c.activity += cla_inc_;
        if (c.activity > 1e20) {
            for (Clause& d : clauses_)
                if (d.learnt) d.activity *= 1e-20;
            cla_inc_ *= 1e-20;
        }
    }

    // First-UIP learning. Returns the learnt clause (asserting literal first,
    // highest remaining level second) and the backjump level.
    std::pair<std::vector<int>, int> analyze(int confl) {
        std::vector<int> learnt{0};
        int pending = 0;
        int p = -1;
        std::size_t idx = trail_.size();
        do {
            Clause& c = clauses_[static_cast<std::size_t>(confl)];
            if (c.learnt) bump_clause(c);
            for (std::size_t j = (p == -1 ? 0 : 1); j < c.lits.size(); ++j) {
                const int q = c.lits[j];
                const auto v = static_cast<std::size_t>(var_of(q));
                if (seen_[v] || level_[v] == 0) continue;
                bump_var(var_of(q));
                seen_[v] = 1;
                if (level_[v] >= decision_level()) ++pending;
                else learnt.push_back(q);
            }
            while (!seen_[static_cast<std::size_t>(var_of(trail_[--idx]))]) {
            }
            p = trail_[idx];
            confl = reason_[static_cast<std::size_t>(var_of(p))];
            seen_[static_cast<std::size_t>(var_of(p))] = 0;
            --pending;
        } while (pending > 0);
        learnt[0] = p ^ 1;

        // Drop literals implied by the rest of the clause through one reason.
        std::vector<int> minimized{learnt[0]};
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            const int r = reason_[static_cast<std::size_t>(var_of(learnt[i]))];
            bool redundant = r != kNoReason;
            if (redundant) {
                for (int q : clauses_[static_cast<std::size_t>(r)].lits) {
                    const auto v = static_cast<std::size_t>(var_of(q));
                    if (var_of(q) != var_of(learnt[i]) && !seen_[v] && level_[v] > 0) {
                        redundant = false;
                        break;
                    }
                }
            }
            if (!redundant) minimized.push_back(learnt[i]);
        }
        for (int q : learnt) seen_[static_cast<std::size_t>(var_of(q))] = 0;

        int back = 0;
        if (minimized.size() > 1) {
            std::size_t best = 1;
            for (std::size_t i = 2; i < minimized.size(); ++i)
                if (level_[static_cast<std::size_t>(var_of(minimized[i]))] >
                    level_[static_cast<std::size_t>(var_of(minimized[best]))])
                    best = i;
            std::swap(minimized[1], minimized[best]);
            back = level_[static_cast<std::size_t>(var_of(minimized[1]))];
        }
        return {std::move(minimized), back};
    }

    void cancel_until(int level) {
        if (decision_level() <= level) return;
        const auto stop = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(level)]);
        for (std::size_t i = trail_.size(); i-- > stop;) {
            const auto v = static_cast<std::size_t>(var_of(trail_[i]));
            phase_[v] = value_[v] == 1;
            value_[v] = kUnassigned;
            reason_[v] = kNoReason;
            heap_.insert(var_of(trail_[i]));
        }
        trail_.resize(stop);
        trail_lim_.resize(static_cast<std::size_t>(level));
        qhead_ = trail_.size();
    }

    bool locked(int ci) const {
        const Clause& c = clauses_[static_cast<std::size_t>(ci)];
        const auto v = static_cast<std::size_t>(var_of(c.lits[0]));
        return reason_[v] == ci && lit_value(c.lits[0]) == 1;
    }

    void reduce_db() {
        std::vector<int> learnts;
        for (std::size_t i = 0; i < clauses_.size(); ++i)
            if (clauses_[i].learnt && !clauses_[i].removed) learnts.push_back(static_cast<int>(i));
        std::stable_sort(learnts.begin(), learnts.end(), [&](int a, int b) {
            return clauses_[static_cast<std::size_t>(a)].activity < clauses_[static_cast<std::size_t>(b)].activity;
        });
        for (std::size_t k = 0; k < learnts.size() / 2; ++k) {
            Clause& c = clauses_[static_cast<std::size_t>(learnts[k])];
            if (c.lits.size() > 2 && !locked(learnts[k])) {
                c.removed = true;
                c.lits.clear();
                c.lits.shrink_to_fit();
                --learnt_count_;
            }
        }
        for (auto& ws : watches_)
            ws.erase(std::remove_if(ws.begin(), ws.end(),
                                    [&](int ci) { return clauses_[static_cast<std::size_t>(ci)].removed; }),
                     ws.end());
        max_learnts_ *= 1.1;
    }

    Result search(std::uint64_t conflict_limit, std::uint64_t budget) {
        std::uint64_t local_conflicts = 0;
        for (;;) {
            const int confl = propagate();
            if (confl != kNoReason) {
                ++conflicts_;
                ++local_conflicts;
                if (decision_level() == 0) return Result::unsat;
                auto [learnt, back] = analyze(confl);
                cancel_until(back);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kNoReason);
                } else {
                    const int lit = learnt[0];
                    const int ci = attach(std::move(learnt), true);
                    bump_clause(clauses_[static_cast<std::size_t>(ci)]);
                    enqueue(lit, ci);
                }
                var_inc_ /= 0.95;
                cla_inc_ /= 0.999;
                continue;
            }
            if (local_conflicts >= conflict_limit) return Result::restart;
            if (static_cast<double>(learnt_count_) >= max_learnts_ + static_cast<double>(trail_.size())) reduce_db();

            int next = -1;
            while (!heap_.empty()) {
                const int v = heap_.pop();
                if (value_[static_cast<std::size_t>(v)] == kUnassigned) {
                    next = v;
                    break;
                }
            }
            if (next == -1) return Result::sat;
            if (decisions_ >= budget) return Result::budget;
            ++decisions_;
            trail_lim_.push_back(static_cast<int>(trail_.size()));
            enqueue(make_lit(next, !phase_[static_cast<std::size_t>(next)]), kNoReason);
        }
    }

    std::vector<signed char> value_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<double> activity_;
    std::vector<char> phase_;
    std::vector<char> seen_;
    std::vector<std::vector<int>> watches_;
    VarHeap heap_;
    std::vector<Clause> clauses_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    double max_learnts_ = 0.0;
    std::size_t learnt_count_ = 0;
    std::uint64_t decisions_ = 0;
    std::uint64_t conflicts_ = 0;
    bool unsat_ = false;
};

} // namespace

ColouringSearch solve_colouring(const ColouringProblem& problem, std::uint64_t budget) {
    const int r = problem.colours;
    if (r < 1) throw std::invalid_argument("at least one colour is required");
    if (problem.forbidden.size() != static_cast<std::size_t>(r))
        throw std::invalid_argument("one forbidden-set list per colour is required");
    const auto var = [r](std::size_t e, int c) { return static_cast<int>(e) * r + c; };
    const int vars = static_cast<int>(problem.edges) * r;

    // Branch on edges by priority; within an edge the deferred colour's
    // variable is decided first and set false, steering away from it.
    std::vector<double> activity(static_cast<std::size_t>(vars), 0.0);
    for (std::size_t e = 0; e < problem.edges; ++e) {
        const double base = e < problem.priority.size() ? problem.priority[e] : 0.0;
        for (int c = 0; c < r; ++c)
            activity[static_cast<std::size_t>(var(e, c))] = base + (c == problem.deferred_colour ? 0.5 : 0.0);
    }

    Solver solver(vars, std::move(activity));
    for (std::size_t e = 0; e < problem.edges; ++e) {
        std::vector<int> at_least_one;
        for (int c = 0; c < r; ++c) at_least_one.push_back(make_lit(var(e, c), false));
        solver.add_clause(std::move(at_least_one));
    }
    for (int c = 0; c < r; ++c) {
        for (const auto& set : problem.forbidden[static_cast<std::size_t>(c)]) {
            std::vector<int> clause;
            for (std::size_t e : set) clause.push_back(make_lit(var(e, c), true));
            solver.add_clause(std::move(clause));
        }
    }

    ColouringSearch out;
    const Solver::Result result = solver.solve(budget);
    out.decisions = solver.decisions();
    out.conflicts = solver.conflicts();
    switch (result) {
    case Solver::Result::sat:
        out.status = ColouringSearch::Status::satisfiable;
        out.colouring.assign(problem.edges, 0);
        for (std::size_t e = 0; e < problem.edges; ++e) {
            int colour = -1;
            for (int c = r - 1; c >= 0; --c)
                if (solver.model_value(var(e, c)) && c != problem.deferred_colour) colour = c;
            if (colour == -1) colour = problem.deferred_colour;
            out.colouring[e] = colour;
        }
        break;
    case Solver::Result::unsat:
        out.status = ColouringSearch::Status::unsatisfiable;
        break;
    default:
        out.status = ColouringSearch::Status::budget_exhausted;
        break;
    }
    return out;
}

} // namespace ramsey::detail
