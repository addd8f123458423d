// Acceptance gate: one PASS/FAIL line per criterion.  Pass --heavy to also
// run the large-size checks (n=8 statistics and real-rootedness).
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mtcomb/altvec.hpp"
#include "mtcomb/asm_algebra.hpp"
#include "mtcomb/enumerate.hpp"
#include "mtcomb/errors.hpp"
#include "mtcomb/hecke.hpp"
#include "mtcomb/interlace.hpp"
#include "mtcomb/phi_poset.hpp"
#include "mtcomb/polynomial.hpp"
#include "mtcomb/qsym.hpp"
#include "mtcomb/serialize.hpp"
#include "mtcomb/stats.hpp"
#include "mtcomb/topology.hpp"

using namespace mtcomb;

namespace {

bool heavy = false;
int jobs = 1;
int failures = 0;

void require(bool ok, std::string& err, const std::string& what) {
    if (!ok && err.empty()) err = what;
}

void criterion(int number, const std::function<void(std::string&)>& body) {
    std::string err;
    try {
        body(err);
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    if (err.empty()) {
        std::cout << "criterion " << number << ": PASS\n";
    } else {
        std::cout << "criterion " << number << ": FAIL (" << err << ")\n";
        ++failures;
    }
}

Int mt_count_formula(int n) {
    Int num = 1, den = 1;
    for (int k = 0; k < n; ++k) {
        for (int i = 1; i <= 3 * k + 1; ++i) num *= i;
        for (int i = 1; i <= n + k; ++i) den *= i;
    }
    return num / den;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Published flag h data for n <= 6, keyed by descent subsets of [n-1].
std::map<std::vector<int>, Int> flag_h_table(int n) {
    switch (n) {
        case 2: return {{{}, 1}, {{1}, 1}};
        case 3: return {{{}, 1}, {{1}, 2}, {{2}, 2}, {{1, 2}, 2}};
        case 4:
            return {{{}, 1},     {{1}, 3},     {{2}, 5},     {{3}, 3},
                    {{1, 2}, 7}, {{1, 3}, 7},  {{2, 3}, 7},  {{1, 2, 3}, 9}};
        case 5:
            return {{{}, 1},        {{1}, 4},        {{2}, 9},        {{3}, 9},
                    {{4}, 4},       {{1, 2}, 16},    {{1, 3}, 26},    {{2, 3}, 32},
                    {{1, 4}, 14},   {{2, 4}, 26},    {{3, 4}, 16},    {{1, 2, 3}, 52},
                    {{1, 2, 4}, 44}, {{1, 3, 4}, 44}, {{2, 3, 4}, 52},
                    {{1, 2, 3, 4}, 80}};
        case 6:
            return {{{}, 1},          {{1}, 5},          {{2}, 14},
                    {{3}, 19},        {{4}, 14},         {{5}, 5},
                    {{1, 2}, 30},     {{1, 3}, 65},      {{2, 3}, 92},
                    {{1, 4}, 58},     {{2, 4}, 125},     {{3, 4}, 92},
                    {{1, 5}, 23},     {{2, 5}, 58},      {{3, 5}, 65},
                    {{4, 5}, 30},     {{1, 2, 3}, 180},  {{1, 2, 4}, 251},
                    {{1, 3, 4}, 298}, {{2, 3, 4}, 405},  {{1, 2, 5}, 120},
                    {{1, 3, 5}, 215}, {{2, 3, 5}, 298},  {{1, 4, 5}, 120},
                    {{2, 4, 5}, 251}, {{3, 4, 5}, 180},  {{1, 2, 3, 4}, 745},
                    {{1, 2, 3, 5}, 562}, {{1, 2, 4, 5}, 487}, {{1, 3, 4, 5}, 562},
                    {{2, 3, 4, 5}, 745}, {{1, 2, 3, 4, 5}, 1321}};
        default: return {};
    }
}

const std::vector<std::vector<Int>> h_table{
    {},
    {1},
    {1, 1},
    {1, 4, 2},
    {1, 11, 21, 9},
    {1, 26, 130, 192, 80},
    {1, 57, 638, 2318, 3101, 1321},
    {1, 120, 2773, 21472, 67340, 87616, 39026},
    {1, 247, 11264, 172222, 1108243, 3260759, 4280764, 2016716}};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;
    jobs = std::max(1u, std::thread::hardware_concurrency());

    // 1. Enumeration counts against the product-formula oracle, with budgets.
    criterion(1, [](std::string& err) {
        const std::vector<Int> counts{1, 1, 2, 7, 42, 429, 7436, 218348};
        for (int n = 1; n <= 7; ++n) {
            auto t0 = std::chrono::steady_clock::now();
            Int seen = 0;
            enumerate_mt(n, [&](const MonotoneTriangle&) { ++seen; });
            double dt = seconds_since(t0);
            require(seen == counts[n], err, "count mismatch at n=" + std::to_string(n));
            require(seen == mt_count_formula(n), err,
                    "product formula mismatch at n=" + std::to_string(n));
            require(dt < (n <= 6 ? 5.0 : 120.0), err,
                    "enumeration too slow at n=" + std::to_string(n));
        }
    });

    // 2. h-vectors for n <= 7, and n = 8 in heavy mode.
    criterion(2, [](std::string& err) {
        for (int n = 2; n <= 7; ++n)
            require(h_vector(n, jobs).coeffs == h_table[n], err,
                    "h-vector mismatch at n=" + std::to_string(n));
        if (heavy)
            require(h_vector(8, jobs, 8).coeffs == h_table[8], err,
                    "h-vector mismatch at n=8");
    });

    // 3. Flag h data for n <= 6, every coefficient.
    criterion(3, [](std::string& err) {
        for (int n = 2; n <= 6; ++n) {
            FlagVector d = descent_distribution(n, jobs);
            auto table = flag_h_table(n);
            for (const auto& [elems, value] : table)
                require(d.at(Subset::of(n - 1, elems)) == value, err,
                        "flag h mismatch at n=" + std::to_string(n));
            Int total = 0;
            for (const auto& v : d.values) total += v;
            require(total == mt_count_formula(n), err,
                    "flag h total mismatch at n=" + std::to_string(n));
            require(d.values.size() == (std::size_t{1} << (n - 1)), err, "flag size");
            require(flag_h_from_f(flag_f_all(n)).values == d.values, err,
                    "flag f route disagrees at n=" + std::to_string(n));
        }
    });

    // 4. Maximal-element counts, two independent routes.
    criterion(4, [](std::string& err) {
        const std::vector<Int> expected{0, 1, 1, 2, 9, 80, 1321, 39026};
        for (int n = 2; n <= 7; ++n) {
            Int via_descents = descent_distribution(n, jobs).values.back();
            require(via_descents == expected[n], err,
                    "descent route mismatch at n=" + std::to_string(n));
            require(maximal_element_count(n) == expected[n], err,
                    "DAG route mismatch at n=" + std::to_string(n));
        }
    });

    // 5. 0-Hecke relations and the interlacing lemmas.
    criterion(5, [](std::string& err) {
        for (int n = 1; n <= 5; ++n)
            for (const auto& T : all_mt(n)) {
                for (int i = 1; i <= n - 1; ++i) {
                    auto Ti = apply_pi(T, i);
                    require(apply_pi(Ti, i) == Ti, err, "idempotence");
                    for (int m = 0; m <= n; ++m)
                        require(componentwise_leq(Ti.rows[m], T.rows[m]), err, "decrease");
                    for (int j = i + 2; j <= n - 1; ++j)
                        require(apply_pi(apply_pi(T, i), j) == apply_pi(apply_pi(T, j), i),
                                err, "commutation");
                    if (i + 1 <= n - 1) {
                        auto lhs = apply_pi(apply_pi(apply_pi(T, i), i + 1), i);
                        auto rhs = apply_pi(apply_pi(apply_pi(T, i + 1), i), i + 1);
                        require(lhs == rhs, err, "braid");
                    }
                }
            }
        // H_min is the componentwise minimum over middles.
        for (int n = 2; n <= 7; ++n)
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
                for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
                    Subset I(n, a), J(n, b);
                    if (J.cardinality() != I.cardinality() + 2 || !leq_lace(I, J))
                        continue;
                    Subset h = h_min(I, J);
                    require(leq_lace(I, h) && leq_lace(h, J), err, "h_min validity");
                    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
                        Subset H(n, c);
                        if (H.cardinality() == I.cardinality() + 1 && leq_lace(I, H) &&
                            leq_lace(H, J))
                            require(componentwise_leq(h, H), err, "h_min minimality");
                    }
                }
        // Interlacing equivalences: covers are exactly alternating differences;
        // comparability is exactly the existence of a saturated chain.
        for (int n = 1; n <= 6; ++n)
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
                for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
                    Subset I(n, a), J(n, b);
                    if (J.cardinality() == I.cardinality() + 1)
                        require(leq_lace(I, J) == is_alternating(indicator_diff(I, J)),
                                err, "cover criterion");
                    if (J.cardinality() >= I.cardinality())
                        require(leq_lace(I, J) == !maximal_chains(I, J).empty(), err,
                                "chain characterization");
                }
    });

    // 6. EL-labeling: unique rising chains (= minimal trapezoids), and the
    // label-lexicographic order extends the weak order.
    criterion(6, [](std::string& err) {
        for (int n = 0; n <= 6; ++n) {
            ElReport r = verify_el_labeling(n);
            require(r.pass, err, "EL failure at n=" + std::to_string(n) + ": " + r.detail);
        }
        for (int n = 1; n <= 6; ++n) {
            WeakOrderDag dag(n);
            auto order = el_lex_order(n);
            std::vector<std::size_t> ids;
            for (const auto& t : order) ids.push_back(dag.index_of(t));
            require(dag.is_linear_extension(ids), err,
                    "EL-lex order not a linear extension at n=" + std::to_string(n));
        }
    });

    // 7. Shellings from weak-order linear extensions; adversarial rejection.
    criterion(7, [](std::string& err) {
        for (int n = 1; n <= 5; ++n) {
            WeakOrderDag dag(n);
            auto check = [&](ExtensionStrategy s, std::uint64_t seed,
                             const char* name) {
                std::vector<MonotoneTriangle> order;
                for (std::size_t id : dag.linear_extension(s, seed))
                    order.push_back(dag.node(id));
                require(dag.is_linear_extension(dag.linear_extension(s, seed)), err,
                        std::string(name) + " not an extension");
                require(verify_shelling(order, jobs).pass, err,
                        std::string(name) + " fails shelling at n=" + std::to_string(n));
            };
            check(ExtensionStrategy::CanonicalTopological, 0, "canonical");
            check(ExtensionStrategy::PermutationsFirst, 0, "permutations-first");
            for (std::uint64_t seed = 0; seed < 100; ++seed)
                check(ExtensionStrategy::SeededRandom, seed, "seeded-random");
        }
        // A non-extension order must be rejected.
        std::vector<MonotoneTriangle> bad;
        bad.push_back(parse_triangle("2; 1 3"));
        for (const auto& t : all_mt(3))
            if (!(t == bad.front())) bad.push_back(t);
        require(!verify_shelling(bad).pass, err, "adversarial order accepted");
    });

    // 8. Multiplicativity of the descent map, and the worked 3x2 product.
    criterion(8, [](std::string& err) {
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; a + b <= 6; ++b) {
                MorphismReport r = verify_morphism(a, b, 6, jobs);
                require(r.pass, err, "morphism fails at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "): " + r.detail);
            }
        AsmMatrix A({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
        AsmMatrix B({{0, 1}, {1, 0}});
        auto prod = asm_product(A, B);
        require(prod.terms.size() == 10, err, "3x2 product term count");
        MonotoneTriangle TA = asm_to_mt(A), TB = asm_to_mt(B);
        std::size_t matched = 0;
        for (std::uint64_t bits = 0; bits < 32; ++bits) {
            Subset S(5, bits);
            if (S.cardinality() != 3) continue;
            MonotoneTriangle T = asm_product_triangle(TA, TB, S);
            auto it = prod.terms.find(mt_to_asm(T));
            require(it != prod.terms.end() && it->second == 1, err,
                    "triangle missing from 3x2 product");
            if (it != prod.terms.end()) ++matched;
        }
        require(matched == 10, err, "3x2 triangle count");
        require(asm_product_triangle(TA, TB, Subset::of(5, {1, 2, 3})) ==
                    parse_triangle("2; 1 3; 1 2 3; 1 2 3 5"),
                err, "first displayed triangle");
        require(asm_product_triangle(TA, TB, Subset::of(5, {3, 4, 5})) ==
                    parse_triangle("5; 4 5; 2 4 5; 1 3 4 5"),
                err, "last displayed triangle");
    });

    // 9. Degree-4 image of the full ASM sum, and the symmetric permutation part.
    criterion(9, [](std::string& err) {
        QSymElement full;
        full.basis = QSymBasis::L;
        for (const auto& A : all_asm(4))
            for (const auto& [alpha, c] : phi_asm(A).terms) full.add(alpha, c);
        const std::vector<std::pair<std::vector<int>, Int>> lcoef{
            {{4}, 1},       {{3, 1}, 3},    {{2, 2}, 5},    {{1, 3}, 3},
            {{2, 1, 1}, 7}, {{1, 2, 1}, 7}, {{1, 1, 2}, 7}, {{1, 1, 1, 1}, 9}};
        require(full.terms.size() == lcoef.size(), err, "L support size");
        for (const auto& [parts, c] : lcoef)
            require(full.terms.count(Composition(parts)) &&
                        full.terms.at(Composition(parts)) == c,
                    err, "L coefficient of " + Composition(parts).to_string());
        QSymElement m = l_to_m(full);
        const std::vector<std::pair<std::vector<int>, Int>> mcoef{
            {{4}, 1},        {{3, 1}, 4},     {{2, 2}, 6},     {{1, 3}, 4},
            {{2, 1, 1}, 16}, {{1, 2, 1}, 14}, {{1, 1, 2}, 16}, {{1, 1, 1, 1}, 42}};
        for (const auto& [parts, c] : mcoef)
            require(m.terms.count(Composition(parts)) &&
                        m.terms.at(Composition(parts)) == c,
                    err, "M coefficient of " + Composition(parts).to_string());
        require(!is_symmetric(m), err, "full sum wrongly symmetric");

        QSymElement m1;
        m1.basis = QSymBasis::M;
        m1.add(Composition({1}), 1);
        for (int n = 1; n <= 4; ++n) {
            QSymElement power = m1;
            for (int k = 2; k <= n; ++k) power = m_product(power, m1);
            QSymElement perms = phi_sum_m(
                n, [](const AsmMatrix& A) { return mt_to_perm(asm_to_mt(A)).has_value(); });
            require(perms == power, err,
                    "permutation sum differs from power sum at n=" + std::to_string(n));
            require(is_symmetric(perms), err, "permutation sum not symmetric");
        }
    });

    // 10. Worked interval examples: inversions, chain lengths, topology.
    criterion(10, [](std::string& err) {
        MonotoneTriangle b4 = parse_triangle("3; 2 4; 1 3 4");
        require(inversion_number(mt_to_asm(b4)) == 5, err, "inv of the 4x4 example");
        WeakOrderDag dag4(4);
        require(dag4.shortest_chain_length(dag4.index_of(b4)) == 4, err,
                "shortest chain of the 4x4 example");

        MonotoneTriangle b5 = parse_triangle("3; 3 4; 1 4 5; 1 2 4 5");
        require(inversion_number(mt_to_asm(b5)) == 5, err, "inv of the 5x5 example");
        WeakOrderDag dag5(5);
        require(dag5.shortest_chain_length(dag5.index_of(b5)) >= 6, err,
                "shortest chain of the 5x5 example");

        std::size_t y = dag4.index_of(parse_triangle("3; 2 3; 1 3 4"));
        std::size_t x = dag4.index_of(parse_triangle("1; 1 3; 1 2 3"));
        auto s = structure_checks(dag4, dag4.bottom(), y);
        require(!s.is_lattice && s.join_failure.has_value(), err, "interval is a lattice");
        if (s.join_failure) {
            std::vector<MonotoneTriangle> pair{dag4.node(s.join_failure->first),
                                              dag4.node(s.join_failure->second)};
            std::sort(pair.begin(), pair.end());
            require(pair[0] == parse_triangle("1; 1 3; 1 2 3") &&
                        pair[1] == parse_triangle("2; 1 2; 1 2 3"),
                    err, "wrong join-failure witness");
        }
        require(s.min_maximal_chain == 4 && s.max_maximal_chain == 5 && !s.is_ranked,
                err, "chain lengths of the lower interval");

        MobiusTable mu(dag4);
        require(mu.mu(dag4.bottom(), y) == -1, err, "mu(bottom, y)");
        auto by = betti_numbers(interval_complex(dag4, dag4.bottom(), y));
        require(by.size() >= 2 && by[0] == 0 && by[1] == 1, err, "Betti of (bottom, y)");
        require(mu.mu(x, y) == 0, err, "mu(x, y)");
        for (const auto& v : betti_numbers(interval_complex(dag4, x, y)))
            require(v == 0, err, "homology of (x, y) not vanishing");
    });

    // 11. Moebius conjecture sweep and the Euler-Poincare identity.
    criterion(11, [](std::string& err) {
        for (int n = 1; n <= 4; ++n) {
            WeakOrderDag dag(n);
            auto report = verify_conjecture(dag);
            require(report.pass(), err,
                    std::to_string(report.discrepancies.size()) +
                        " discrepancies at n=" + std::to_string(n));
            MobiusTable mu(dag);
            for (std::size_t lo = 0; lo < dag.size(); ++lo)
                for (std::size_t hi = 0; hi < dag.size(); ++hi) {
                    if (!dag.weak_leq(lo, hi) || lo == hi) continue;
                    IntervalComplex c;
                    try {
                        c = interval_complex(dag, lo, hi, 16);
                    } catch (const ResourceGuardError&) {
                        continue;
                    }
                    Int chi = 0;
                    if (c.proper.empty()) {
                        chi = -1;
                    } else {
                        int sign = 1;
                        for (const auto& v : betti_numbers(c)) {
                            chi += sign * v;
                            sign = -sign;
                        }
                    }
                    require(mu.mu(lo, hi) == chi, err, "Euler-Poincare mismatch");
                }
        }
        WeakOrderDag dag4(4);
        std::size_t y = dag4.index_of(parse_triangle("3; 2 3; 1 3 4"));
        std::size_t x = dag4.index_of(parse_triangle("1; 1 3; 1 2 3"));
        require(conjecture_prediction(dag4, dag4.bottom(), y).value == -1, err,
                "prediction at (bottom, y)");
        require(conjecture_prediction(dag4, x, y).value == 0, err, "prediction at (x, y)");
    });

    // 12. Real-rootedness and log-concavity of the h-vectors.
    criterion(12, [](std::string& err) {
        int top = heavy ? 8 : 7;
        for (int n = 2; n <= top; ++n) {
            IntPolynomial h{h_table[n]};
            auto rr = real_rootedness_check(h);
            require(rr.real_rooted, err, "not real-rooted at n=" + std::to_string(n));
            auto lc = log_concavity_check(h);
            require(lc.log_concave && lc.nonnegative && lc.no_internal_zeros, err,
                    "not log-concave at n=" + std::to_string(n));
        }
    });

    return failures == 0 ? 0 : 1;
}
