// Acceptance suite: runs every headline property end to end and prints one
// PASS/FAIL line per criterion. Exit code 0 iff everything passed.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "sqr/certificates.hpp"
#include "sqr/fm.hpp"
#include "sqr/gallery.hpp"
#include "sqr/lp.hpp"
#include "sqr/validators.hpp"

using namespace sqr;
using sqr::testing::affine_copy;
using sqr::testing::random_admissible;
using sqr::testing::random_arrangement;
using sqr::testing::random_squares;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << "\n" << std::flush;
    if (!pass)
        ++failures;
}

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, name, pass, detail);
}

}  // namespace

int main() {
    run(1, "unsquarable four-cycle: infeasible with certificate, < 100 ms", [](std::string& d) {
        const auto t0 = Clock::now();
        Arrangement arr = fig3_cycle();
        const bool infeasible = !solve_feasibility(build_lp(arr)).feasible();
        auto cycle = find_cycle(build_size_order(arr));
        const double ms = ms_since(t0);
        std::ostringstream os;
        os << ms << " ms";
        d = os.str();
        return infeasible && cycle && cycle->nodes.size() == 5 && ms < 100.0;
    });

    run(2, "sigma gadget: feasible, witness exact in all validators, < 1 s", [](std::string& d) {
        const auto t0 = Clock::now();
        Arrangement arr = sigma_gadget();
        Verdict v = solve_feasibility(build_lp(arr), arr.labels);
        if (!v.feasible())
            return false;
        const Arrangement& squares = v.witness->squares;
        const bool ok = squares.size() == 13 && check_is_squares(squares) &&
                        check_order_preserved(arr, squares) &&
                        check_combinatorial_equivalence(arr, squares);
        const double ms = ms_since(t0);
        std::ostringstream os;
        os << ms << " ms";
        d = os.str();
        return ok && ms < 1000.0;
    });

    run(3, "combinatorial-equivalence counterexample: infeasible, < 1 s", [](std::string& d) {
        const auto t0 = Clock::now();
        Arrangement arr = fig4_combinatorial();
        const bool ok = arr.size() == 20 && check_admissible_input(arr).ok() &&
                        !solve_feasibility(build_lp(arr)).feasible();
        const double ms = ms_since(t0);
        std::ostringstream os;
        os << ms << " ms";
        d = os.str();
        return ok && ms < 1000.0;
    });

    run(4, "gadget-composed counterexample: 104 rects, 414 vars, infeasible, < 60 s",
        [](std::string& d) {
            const auto t0 = Clock::now();
            Arrangement arr = fig8_composed();
            LinearSystem sys = build_lp(arr);
            const bool ok = arr.size() == 104 && sys.num_vars == 414 &&
                            !solve_feasibility(sys).feasible();
            const double ms = ms_since(t0);
            std::ostringstream os;
            os << ms << " ms";
            d = os.str();
            return ok && ms < 60000.0;
        });

    run(5, "3D triple: three-cycle with per-axis justifications", [](std::string& d) {
        Arrangement arr = fig9_boxes3d();
        auto cycle = find_cycle(build_size_order(arr));
        if (!cycle || cycle->nodes.size() != 4)
            return false;
        // the three edges must be forced by the three distinct projections,
        // with B smaller than A via axis 1, C via axis 2, A via axis 3
        std::vector<int> axes;
        for (const auto& e : cycle->edges)
            axes.push_back(e.axis);
        std::ostringstream os;
        os << "cycle";
        for (std::size_t i = 0; i < cycle->edges.size(); ++i)
            os << " " << arr.labels[static_cast<std::size_t>(cycle->edges[i].from)] << "<"
               << arr.labels[static_cast<std::size_t>(cycle->edges[i].to)] << "@axis"
               << cycle->edges[i].axis;
        d = os.str();
        return cycle->nodes == std::vector<int>{0, 2, 1, 0} &&
               axes == std::vector<int>{3, 2, 1};
    });

    run(6, "solver and elimination oracle agree on 500 random instances", [](std::string& d) {
        std::mt19937 rng(1001);
        int feas = 0;
        for (int t = 0; t < 500; ++t) {
            const int n = 2 + t % 3;  // up to n = 4
            Arrangement arr = random_arrangement(rng, n, 16);
            LinearSystem sys = build_lp(arr);
            const bool solver = solve_feasibility(sys).feasible();
            const bool oracle = fm_oracle(sys) == FmVerdict::Feasible;
            if (solver != oracle)
                return false;
            feas += solver;
        }
        std::ostringstream os;
        os << feas << "/500 feasible";
        d = os.str();
        return feas > 0 && feas < 500;
    });

    run(7, "witness round trip on 200 feasible instances", [](std::string& d) {
        std::mt19937 rng(2002);
        int collected = 0, attempts = 0;
        while (collected < 200 && attempts < 4000) {
            ++attempts;
            Arrangement arr = (attempts % 2) ? random_arrangement(rng, 3 + attempts % 3, 20)
                                             : random_squares(rng, 3 + attempts % 3, 24);
            LinearSystem sys = build_lp(arr);
            Verdict v = solve_feasibility(sys, arr.labels);
            if (!v.feasible())
                continue;
            ++collected;
            const Arrangement& squares = v.witness->squares;
            if (!check_is_squares(squares) || !check_order_preserved(arr, squares))
                return false;
            Arrangement again = reconstruct_squares(sys, v.witness->assignment, arr);
            if (!(again.boxes == squares.boxes))
                return false;
        }
        std::ostringstream os;
        os << collected << " feasible instances";
        d = os.str();
        return collected >= 200;
    });

    run(8, "every size-order cycle coincides with an infeasible LP", [](std::string& d) {
        int certified = 0;
        for (const char* name : {"fig2", "fig3", "fig4", "sigma", "fig8"}) {
            Arrangement arr = *gallery_by_name(name);
            auto cycle = find_cycle(build_size_order(arr));
            if (!cycle)
                continue;
            ++certified;
            if (solve_feasibility(build_lp(arr)).feasible())
                return false;
        }
        std::mt19937 rng(3003);
        for (int t = 0; t < 500; ++t) {
            Arrangement arr = random_arrangement(rng, 3 + t % 3, 20);
            auto cycle = find_cycle(build_size_order(arr));
            if (!cycle)
                continue;
            ++certified;
            if (solve_feasibility(build_lp(arr)).feasible())
                return false;
        }
        std::ostringstream os;
        os << certified << " certificates";
        d = os.str();
        return certified > 0;
    });

    run(9, "variant implication chain on 500 random pairs", [](std::string& d) {
        std::mt19937 rng(4004);
        int strong = 0;
        for (int t = 0; t < 500; ++t) {
            Arrangement input = random_admissible(rng, 4, 36);
            Arrangement candidate;
            if (t % 3 == 0)
                candidate = affine_copy(input, Rational(2), Rational(1), Rational(3),
                                        Rational(-5));
            else if (t % 3 == 1)
                candidate = random_arrangement(rng, 4, 36);
            else {
                Verdict v = solve_feasibility(build_lp(input), input.labels);
                candidate = v.feasible() ? v.witness->squares : random_arrangement(rng, 4, 36);
            }
            bool order = false;
            try {
                order = check_order_preserved(input, candidate);
            } catch (const GeneralPositionViolation&) {
                order = false;
            }
            const bool comb = check_combinatorial_equivalence(input, candidate);
            const bool nop = check_keep_intersections_no_piercing(input, candidate);
            const bool graph = check_keep_intersection_graph(input, candidate);
            if ((order && !comb) || (comb && !nop) || (nop && !graph))
                return false;
            strong += comb;
        }
        std::ostringstream os;
        os << strong << " pairs with premises firing";
        d = os.str();
        return strong > 50;
    });

    run(10, "neighbor-size lemma holds on 1000 random neighborhoods", [](std::string& d) {
        std::mt19937 rng(5005);
        std::uniform_int_distribution<int> extra(0, 3);
        int built = 0;
        for (int t = 0; t < 1000; ++t) {
            NeighborhoodInstance inst;
            const int variant = t % 3;  // (d,k) in {(1,1),(1,2),(2,1)}
            const int dd = variant == 2 ? 2 : 1;
            inst.k = variant == 1 ? 2 : 1;
            const int count = ramsey_lookup(inst.k + 2, dd) + extra(rng);
            const Rational S(100);
            std::uniform_int_distribution<int> numer(1, 12);
            if (dd == 1) {
                inst.center = BoxD({Interval(Rational(0), S)});
                for (int i = 0; i < count; ++i) {
                    // slot boundaries keep the neighbors pairwise disjoint
                    Rational slot_lo = S * i / count;
                    Rational side = (S / count) * numer(rng) / 14;
                    Rational lo = slot_lo + (S / count - side) * numer(rng) / 13;
                    inst.neighbors.push_back(BoxD({Interval(lo, lo + side)}));
                }
            } else {
                inst.center = make_rect(Rational(0), S, Rational(0), S);
                for (int i = 0; i < count; ++i) {
                    Rational slot_lo = S * i / count;
                    Rational side = (S / count) * numer(rng) / 14;
                    Rational lo = slot_lo + (S / count - side) * numer(rng) / 13;
                    // poke across the bottom edge
                    Rational drop = side * numer(rng) / 13;
                    inst.neighbors.push_back(
                        make_rect(lo, lo + side, -drop, side - drop));
                }
            }
            LemmaOutcome out = check_neighbor_size_lemma(inst);
            if (!out.ok())
                return false;
            ++built;
        }
        std::ostringstream os;
        os << built << " instances";
        d = os.str();
        return built == 1000;
    });

    run(11, "interval taxonomy over the 6-point grid", [](std::string& d) {
        // Over all ordered interval pairs with 4 distinct endpoints in
        // {0..5}: each 4-subset contributes its 3 splits in 2 orders, so
        // every relation appears exactly C(6,4) = 15 times.
        int rel_count[6] = {0, 0, 0, 0, 0, 0};
        std::vector<std::pair<Interval, Interval>> pairs;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = 0; c < 6; ++c)
                    for (int e = c + 1; e < 6; ++e) {
                        if (a == c || a == e || b == c || b == e)
                            continue;
                        Interval p{Rational(a), Rational(b)}, q{Rational(c), Rational(e)};
                        IntervalRelation r = interval_relation(p, q);
                        if (mirror(interval_relation(q, p)) != r)
                            return false;
                        ++rel_count[static_cast<int>(r)];
                        pairs.emplace_back(p, q);
                    }
        for (int i = 0; i < 6; ++i)
            if (rel_count[i] != 15)
                return false;

        // Every non-disjoint 2D combination lands in exactly one of the four
        // kinds, with the counts fixed by the 1D tallies.
        int kind_count[6] = {0, 0, 0, 0, 0, 0};
        for (const auto& [px, qx] : pairs)
            for (const auto& [py, qy] : pairs) {
                BoxD u({px, py}), v({qx, qy});
                ++kind_count[static_cast<int>(classify_pair(u, v).kind)];
            }
        std::ostringstream os;
        os << "disjoint " << kind_count[0] << ", corner " << kind_count[1] << ", piercing "
           << kind_count[2] << ", cross " << kind_count[3] << ", containment " << kind_count[4];
        d = os.str();
        return kind_count[0] == 4500 && kind_count[1] == 900 && kind_count[2] == 1800 &&
               kind_count[3] == 450 && kind_count[4] == 450 && kind_count[5] == 0;
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
