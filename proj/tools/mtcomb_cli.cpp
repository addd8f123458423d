#include <iostream>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mtcomb/asm_algebra.hpp"
#include "mtcomb/cache.hpp"
#include "mtcomb/enumerate.hpp"
#include "mtcomb/errors.hpp"
#include "mtcomb/hecke.hpp"
#include "mtcomb/phi_poset.hpp"
#include "mtcomb/serialize.hpp"
#include "mtcomb/stats.hpp"
#include "mtcomb/topology.hpp"
#include "mtcomb/weak_dag.hpp"

using nlohmann::json;
using namespace mtcomb;

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 resource-guard refusal.
constexpr int kOk = 0, kFail = 1, kUsage = 2, kGuard = 3;

struct Options {
    int n = 3;
    int a = 0, b = 0;
    std::string format = "pretty";  // json | tsv | pretty
    std::uint64_t seed = 0;
    std::string strategy = "canonical-topological";
    int jobs = 1;
    std::string cache_dir;
    bool heavy = false;
    std::string order_file;
    std::string from = "triangle", to = "asm";
    std::string suite = "all";
    std::string report = "inv-vs-chains";
    std::string x_text, y_text;
    bool perms_only = false;
};

void emit_flat(const json& j, std::ostream& os, const std::string& prefix) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            emit_flat(it.value(), os, prefix.empty() ? it.key() : prefix + "." + it.key());
    } else {
        os << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const json& j, const Options& opt) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else if (opt.format == "tsv") {
        emit_flat(j, std::cout, "");
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::cout << it.key() << ": ";
            if (it.value().is_string())
                std::cout << it.value().get<std::string>();
            else
                std::cout << it.value().dump();
            std::cout << '\n';
        }
    }
}

std::string big(const Int& v) { return v.str(); }

json poly_json(const IntPolynomial& p) {
    json a = json::array();
    for (const Int& c : p.coeffs) a.push_back(big(c));
    return a;
}

int cmd_convert(const Options& opt) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    std::string input = buf.str();
    MonotoneTriangle T({Subset::empty(0)});
    if (opt.from == "triangle") {
        T = opt.format == "json" ? triangle_from_json(json::parse(input))
                                 : parse_triangle(input);
    } else if (opt.from == "asm") {
        T = asm_to_mt(opt.format == "json" ? asm_from_json(json::parse(input))
                                           : parse_asm(input));
    } else if (opt.from == "perm") {
        T = perm_to_mt(parse_permutation(input));
    } else {
        std::cerr << "convert: unknown --from form '" << opt.from << "'\n";
        return kUsage;
    }
    if (opt.to == "triangle") {
        std::cout << (opt.format == "json" ? triangle_to_json(T).dump()
                                           : format_triangle(T))
                  << '\n';
    } else if (opt.to == "asm") {
        if (opt.format == "json")
            std::cout << asm_to_json(mt_to_asm(T)).dump() << '\n';
        else
            std::cout << format_asm(mt_to_asm(T));
    } else if (opt.to == "perm") {
        auto w = mt_to_perm(T);
        if (!w) {
            std::cerr << "convert: not a permutation triangle\n";
            return kFail;
        }
        std::cout << format_permutation(*w) << '\n';
    } else {
        std::cerr << "convert: unknown --to form '" << opt.to << "'\n";
        return kUsage;
    }
    return kOk;
}

int cmd_enumerate(const Options& opt) {
    int guard = opt.heavy ? 8 : 7;
    EnumerationCache cache = EnumerationCache::from_flag(opt.cache_dir);
    auto list = cache.enabled() ? cache.load_or_enumerate(opt.n, guard)
                                : all_mt(opt.n, guard);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& t : list) arr.push_back(triangle_to_json(t));
        std::cout << json{{"n", opt.n}, {"count", list.size()}, {"triangles", arr}}.dump()
                  << '\n';
    } else {
        for (const auto& t : list) std::cout << format_triangle(t) << '\n';
    }
    return kOk;
}

int cmd_stats(const Options& opt) {
    int guard = opt.heavy ? 8 : 7;
    int n = opt.n;
    FlagVector flag_h = descent_distribution(n, opt.jobs, guard);
    Int total = 0;
    for (const Int& v : flag_h.values) total += v;
    IntPolynomial h;
    h.coeffs.assign(n, 0);
    for (std::size_t bset = 0; bset < flag_h.values.size(); ++bset)
        h.coeffs[__builtin_popcountll(bset)] += flag_h.values[bset];
    h.normalize();

    json flag = json::object();
    for (std::size_t bset = 0; bset < flag_h.values.size(); ++bset)
        flag[Subset(n - 1, bset).to_string()] = big(flag_h.values[bset]);

    json out;
    out["n"] = n;
    out["mt_count"] = big(total);
    out["h_vector"] = poly_json(h);
    if (n <= 7) {  // flag-f DP and the DAG stay cheap here
        std::vector<Int> f = f_vector(n, guard);
        json fv = json::array();
        for (const Int& c : f) fv.push_back(big(c));
        out["f_vector"] = fv;
        out["maximal_elements"] = big(maximal_element_count(n, guard));
    } else {
        out["maximal_elements"] = big(h.coeffs.back());
    }
    out["flag_h"] = flag;
    auto pos = log_concavity_check(h);
    auto rr = real_rootedness_check(h);
    out["log_concave"] = pos.log_concave && pos.nonnegative && pos.no_internal_zeros;
    out["real_rooted"] = rr.real_rooted;
    out["h_argmax"] = h_argmax(h);
    emit(out, opt);
    return kOk;
}

int verify_hecke_suite(const Options& opt, json& out) {
    int guard = opt.heavy ? 6 : 5;
    if (opt.n > guard) throw ResourceGuardError("verify hecke: n exceeds guard");
    bool ok = true;
    std::string detail;
    enumerate_mt(opt.n, [&](const MonotoneTriangle& T) {
        if (!ok) return;
        int n = T.n;
        for (int i = 1; i <= n - 1 && ok; ++i) {
            MonotoneTriangle Ti = apply_pi(T, i);
            if (!(apply_pi(Ti, i) == Ti)) { ok = false; detail = "idempotence"; }
            for (int j = i + 2; j <= n - 1 && ok; ++j)
                if (!(apply_pi(apply_pi(T, i), j) == apply_pi(apply_pi(T, j), i))) {
                    ok = false;
                    detail = "commutation";
                }
            if (i + 1 <= n - 1 && ok) {
                if (!(apply_word(T, {i, i + 1, i}) == apply_word(T, {i + 1, i, i + 1}))) {
                    ok = false;
                    detail = "braid";
                }
            }
        }
        if (ok && !(descent_set(T) == descent_no_preimage_set(T))) {
            ok = false;
            detail = "descent characterization";
        }
        if (!ok) detail += " fails at " + format_triangle(T);
    }, guard);
    out["hecke"] = ok ? "pass" : "fail: " + detail;
    return ok ? kOk : kFail;
}

int verify_el_suite(const Options& opt, json& out) {
    int guard = opt.heavy ? 7 : 6;
    if (opt.n > guard) throw ResourceGuardError("verify el: n exceeds guard");
    ElReport el = verify_el_labeling(opt.n, guard);
    bool lex_ok = true;
    if (opt.n <= 6) {
        WeakOrderDag dag(opt.n, 7, true);
        auto order = el_lex_order(opt.n, guard);
        std::vector<std::size_t> ids;
        ids.reserve(order.size());
        for (const auto& t : order) ids.push_back(dag.index_of(t));
        lex_ok = dag.is_linear_extension(ids);
    }
    out["el"] = el.pass && lex_ok
                    ? "pass"
                    : "fail: " + (el.pass ? std::string("EL order not a linear extension")
                                          : el.detail);
    return el.pass && lex_ok ? kOk : kFail;
}

int verify_shelling_suite(const Options& opt, json& out) {
    int guard = opt.heavy ? 6 : 5;
    if (opt.n > guard) throw ResourceGuardError("verify shelling: n exceeds guard");
    std::vector<MonotoneTriangle> order;
    if (!opt.order_file.empty()) {
        std::ifstream in(opt.order_file);
        if (!in) {
            std::cerr << "cannot open order file " << opt.order_file << '\n';
            return kUsage;
        }
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) order.push_back(parse_triangle(line));
    } else {
        WeakOrderDag dag(opt.n, guard, true);
        auto ids = dag.linear_extension(parse_strategy(opt.strategy), opt.seed);
        for (std::size_t id : ids) order.push_back(dag.node(id));
    }
    ShellingReport rep = verify_shelling(order, opt.jobs);
    if (rep.pass) {
        out["shelling"] = "pass";
        return kOk;
    }
    std::ostringstream os;
    os << "fail: facets " << rep.witness_failure->first << " and "
       << rep.witness_failure->second << " ("
       << format_triangle(order[rep.witness_failure->first]) << " | "
       << format_triangle(order[rep.witness_failure->second]) << ")";
    out["shelling"] = os.str();
    return kFail;
}

int verify_morphism_suite(const Options& opt, json& out) {
    int guard = 6;
    int a = opt.a ? opt.a : 2, b = opt.b ? opt.b : 2;
    if (a + b > guard) throw ResourceGuardError("verify morphism: a+b exceeds guard");
    MorphismReport rep = verify_morphism(a, b, guard, opt.jobs);
    out["morphism"] = rep.pass ? "pass" : "fail: " + rep.detail;
    return rep.pass ? kOk : kFail;
}

int verify_conjecture_suite(const Options& opt, json& out) {
    int guard = opt.heavy ? 5 : 4;
    if (opt.n > guard) throw ResourceGuardError("verify conjecture: n exceeds guard");
    WeakOrderDag dag(opt.n, guard, true);
    ConjectureReport rep = verify_conjecture(dag);
    json r;
    r["pairs"] = rep.pairs;
    r["agreements"] = rep.agreements;
    json disc = json::array();
    for (auto& [x, y] : rep.discrepancies)
        disc.push_back(format_triangle(dag.node(x)) + " | " + format_triangle(dag.node(y)));
    r["discrepancies"] = disc;
    out["conjecture"] = r;
    return rep.pass() ? kOk : kFail;
}

int cmd_verify(const Options& opt) {
    json out;
    int rc = kOk;
    auto run = [&](const std::string& name, int (*f)(const Options&, json&)) {
        if (opt.suite == name || opt.suite == "all") rc = std::max(rc, f(opt, out));
    };
    run("hecke", verify_hecke_suite);
    run("el", verify_el_suite);
    run("shelling", verify_shelling_suite);
    run("morphism", verify_morphism_suite);
    run("conjecture", verify_conjecture_suite);
    if (out.empty()) {
        std::cerr << "verify: unknown suite '" << opt.suite << "'\n";
        return kUsage;
    }
    emit(out, opt);
    return rc;
}

int cmd_explore(const Options& opt) {
    int guard = opt.heavy ? 8 : 7;
    json out;
    if (opt.report == "inv-vs-chains") {
        if (opt.n > 5 && !opt.heavy)
            throw ResourceGuardError("explore inv-vs-chains: n exceeds guard");
        WeakOrderDag dag(opt.n, guard, false);
        json rows = json::array();
        for (std::size_t id = 0; id < dag.size(); ++id) {
            const auto& T = dag.node(id);
            rows.push_back(json{{"triangle", format_triangle(T)},
                                {"inv", inversion_number(mt_to_asm(T))},
                                {"shortest_chain", dag.shortest_chain_length(id)}});
        }
        out["rows"] = rows;
    } else if (opt.report == "symmetric-subsets") {
        auto pred = opt.perms_only
                        ? std::function<bool(const AsmMatrix&)>([](const AsmMatrix& A) {
                              for (const auto& row : A.entries)
                                  for (int v : row)
                                      if (v < 0) return false;
                              return true;
                          })
                        : std::function<bool(const AsmMatrix&)>(
                              [](const AsmMatrix&) { return true; });
        QSymElement img = phi_sum_m(opt.n, pred, guard);
        out["predicate"] = opt.perms_only ? "permutations-only" : "all";
        out["symmetric"] = is_symmetric(img);
        out["m_expansion"] = img.to_string();
    } else if (opt.report == "h-argmax") {
        IntPolynomial h = h_vector(opt.n, opt.jobs, guard);
        out["h_vector"] = poly_json(h);
        out["argmax"] = h_argmax(h);
        out["is_n_minus_2"] = h_argmax(h) == opt.n - 2;
    } else {
        std::cerr << "explore: unknown report '" << opt.report << "'\n";
        return kUsage;
    }
    emit(out, opt);
    return kOk;
}

int cmd_mobius(const Options& opt) {
    int guard = opt.heavy ? 5 : 4;
    if (opt.n > guard) throw ResourceGuardError("mobius: n exceeds guard");
    WeakOrderDag dag(opt.n, guard, true);
    std::size_t x = dag.bottom();
    if (!opt.x_text.empty()) x = dag.index_of(parse_triangle(opt.x_text));
    if (opt.y_text.empty()) {
        std::cerr << "mobius: --y is required\n";
        return kUsage;
    }
    std::size_t y = dag.index_of(parse_triangle(opt.y_text));
    MobiusTable table(dag);
    json out;
    out["mu"] = big(table.mu(x, y));
    auto pred = conjecture_prediction(dag, x, y);
    out["prediction"] = big(pred.value);
    out["J"] = pred.J.to_string();
    try {
        auto cx = interval_complex(dag, x, y);
        json betti = json::array();
        for (const Int& bi : betti_numbers(cx)) betti.push_back(big(bi));
        out["reduced_betti"] = betti;
    } catch (const ResourceGuardError&) {
        out["reduced_betti"] = "skipped (interval too large)";
    }
    auto sr = structure_checks(dag, x, y);
    out["is_lattice"] = sr.is_lattice;
    out["is_ranked"] = sr.is_ranked;
    out["chain_lengths"] = json::array({sr.min_maximal_chain, sr.max_maximal_chain});
    emit(out, opt);
    return kOk;
}

int cmd_qsym(const Options& opt) {
    int guard = opt.n <= 5 ? 5 : 0;
    if (opt.n > 5) throw ResourceGuardError("qsym: n exceeds guard");
    (void)guard;
    QSymElement sumL;
    sumL.basis = QSymBasis::L;
    enumerate_mt(opt.n, [&](const MonotoneTriangle& t) {
        sumL.add(alpha_of_set(descent_set(t), opt.n), 1);
    }, 5);
    QSymElement sumM = l_to_m(sumL);
    json out;
    out["n"] = opt.n;
    out["l_expansion"] = sumL.to_string();
    out["m_expansion"] = sumM.to_string();
    out["symmetric"] = is_symmetric(sumM);
    emit(out, opt);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone triangles, the interlacing poset, and their invariants"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "ground set size");
        sub->add_option("--format", opt.format, "json | tsv | pretty")
            ->check(CLI::IsMember({"json", "tsv", "pretty"}));
        sub->add_option("--seed", opt.seed, "seed for randomized orders");
        sub->add_option("--jobs", opt.jobs, "parallelism width");
        sub->add_option("--cache-dir", opt.cache_dir, "enumeration cache directory");
        sub->add_flag("--heavy", opt.heavy, "raise resource guards by one step");
    };

    auto* convert = app.add_subcommand("convert", "convert between triangle/ASM/permutation");
    add_common(convert);
    convert->add_option("--from", opt.from, "triangle | asm | perm");
    convert->add_option("--to", opt.to, "triangle | asm | perm");

    auto* enumerate = app.add_subcommand("enumerate", "list MT_n in canonical order");
    add_common(enumerate);

    auto* stats = app.add_subcommand("stats", "descent statistics and h-vectors");
    add_common(stats);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", opt.suite, "hecke | el | shelling | morphism | conjecture | all");
    verify->add_option("--a", opt.a, "left factor size (morphism)");
    verify->add_option("--b", opt.b, "right factor size (morphism)");
    verify->add_option("--strategy", opt.strategy,
                       "canonical-topological | permutations-first | seeded-random");
    verify->add_option("--order-file", opt.order_file, "explicit facet order, one triangle per line");

    auto* explore = app.add_subcommand("explore", "open-question data tables");
    add_common(explore);
    explore->add_option("--report", opt.report, "inv-vs-chains | symmetric-subsets | h-argmax");
    explore->add_flag("--perms-only", opt.perms_only, "restrict to permutation ASMs");

    auto* mobius = app.add_subcommand("mobius", "Moebius/topology report for an interval");
    add_common(mobius);
    mobius->add_option("--x", opt.x_text, "lower triangle (default: bottom)");
    mobius->add_option("--y", opt.y_text, "upper triangle");

    auto* qsym = app.add_subcommand("qsym", "image of the full ASM_n sum under phi");
    add_common(qsym);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (convert->parsed()) return cmd_convert(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (stats->parsed()) return cmd_stats(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (explore->parsed()) return cmd_explore(opt);
        if (mobius->parsed()) return cmd_mobius(opt);
        if (qsym->parsed()) return cmd_qsym(opt);
    } catch (const ResourceGuardError& e) {
        std::cerr << e.what() << '\n';
        return kGuard;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
