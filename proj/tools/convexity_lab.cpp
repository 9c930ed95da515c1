#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cvx/algebra.hpp"
#include "cvx/error.hpp"
#include "cvx/expander.hpp"
#include "cvx/parser.hpp"
#include "cvx/report.hpp"
#include "cvx/selftest.hpp"
#include "cvx/squeeze.hpp"
#include "cvx/surface.hpp"

namespace {

using namespace cvx;

struct Common {
    std::string format = "text";
    std::uint64_t seed = 0;
    bool no_timing = false;
    bool witnesses = false;
    bool run_selftest = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--seed", c.seed, "Deterministic seed for generated families");
    cmd->add_flag("--no-timing", c.no_timing, "Suppress timing fields");
    cmd->add_flag("--witnesses", c.witnesses, "Include full witness lists in reports");
    cmd->add_flag("--selftest", c.run_selftest, "Run this command's example corpus and exit");
}

Json common_config(const std::string& command, const Common& c) {
    Json j;
    j["format"] = c.format;
    j["seed"] = c.seed;
    j["no_timing"] = c.no_timing;
    j["witnesses"] = c.witnesses;
    (void)command;
    return j;
}

int emit_or_selftest(const std::string& command, const Common& c, Json config,
                     const std::function<void(Json&, std::optional<Table>&)>& body) {
    if (c.run_selftest) {
        for (const auto& line : selftest(command)) std::cout << line << "\n";
        std::cout << "selftest ok\n";
        return 0;
    }
    Json result;
    std::optional<Table> table;
    body(result, table);
    std::cout << render_report(command, config, result, table, format_from_name(c.format));
    return 0;
}

Json witness_json(const WitnessReport& rep, bool include_witnesses) {
    Json j;
    j["claimed_floor"] = rep.claimed_floor;
    j["witness_count"] = rep.witnesses.size();
    j["container"] = rep.container_description;
    if (include_witnesses) j["witnesses"] = qset_json(rep.witnesses);
    return j;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_pairs_file(const std::string& path) {
    std::ifstream in(path);
    CVX_REQUIRE(in.good(), "cannot open pairs file '" + path + "'");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long i, j;
        std::string extra;
        if (ls >> i) {
            CVX_REQUIRE(static_cast<bool>(ls >> j) && !(ls >> extra),
                        "pairs file line " + std::to_string(lineno) +
                            " must hold exactly two 1-based indices");
            CVX_REQUIRE(i >= 1 && j >= 1, "pair indices are 1-based (line " +
                                              std::to_string(lineno) + ")");
            out.emplace_back(static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1));
        } else {
            ls.clear();
            CVX_REQUIRE(!(ls >> extra), "malformed pairs file line " + std::to_string(lineno));
        }
    }
    return out;
}

SetOp setop_from_name(const std::string& s) {
    if (s == "sum") return SetOp::Sum;
    if (s == "diff") return SetOp::Diff;
    if (s == "prod") return SetOp::Prod;
    if (s == "ratio") return SetOp::Ratio;
    throw PreconditionError("unknown op '" + s + "'");
}

std::vector<std::size_t> parse_index_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        CVX_REQUIRE(tok.find_first_not_of("0123456789") == std::string::npos && tok.size() <= 9,
                    "index list entries must be small non-negative integers, got '" + tok + "'");
        out.push_back(static_cast<std::size_t>(std::stoul(tok)));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"convexity-lab: exact arithmetic for convexity, sumsets and expanders"};
    app.require_subcommand(1);
    app.footer("Parameter naming convention: s0..s3 are the four fixed shifts, t0,t1 the\n"
               "two eliminated variables, x,y,z surface coordinates. Set files hold one\n"
               "rational per line ('#' comments) or a JSON array of strings. Pairs files\n"
               "hold 1-based 'i j' index lines. CONVEXITY_LAB_THREADS caps parallelism.");

    int rc = 0;
    auto wrap = [&rc](std::function<int()> f) {
        return [&rc, f = std::move(f)]() { rc = f(); };
    };

    // ---- degen-test ----
    auto* dt = app.add_subcommand("degen-test", "Derivative test on f(x, y)");
    auto dt_c = std::make_shared<Common>();
    auto dt_f = std::make_shared<std::string>();
    auto dt_x = std::make_shared<std::string>("x");
    auto dt_y = std::make_shared<std::string>("y");
    add_common(dt, *dt_c);
    dt->add_option("--f", *dt_f, "Expression for f");
    dt->add_option("--xvar", *dt_x, "Name of the first test variable");
    dt->add_option("--yvar", *dt_y, "Name of the second test variable");
    dt->callback(wrap([dt_c, dt_f, dt_x, dt_y] {
        Json config = common_config("degen-test", *dt_c);
        config["f"] = *dt_f;
        config["xvar"] = *dt_x;
        config["yvar"] = *dt_y;
        return emit_or_selftest("degen-test", *dt_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!dt_f->empty(), "missing --f");
            auto rep = degeneracy_test(parse_rational_function(*dt_f), var(*dt_x), var(*dt_y));
            result["T"] = print_canonical(rep.test_function);
            result["verdict"] =
                rep.verdict == Verdict::NonDegenerate ? "NonDegenerate" : "Inconclusive";
            result["excluded_locus"] = print_canonical(rep.excluded_locus);
        });
    }));

    // ---- xn-check ----
    auto* xn = app.add_subcommand("xn-check", "Family check for f = x^2, g = x^n");
    auto xn_c = std::make_shared<Common>();
    auto xn_n = std::make_shared<std::uint32_t>(3);
    add_common(xn, *xn_c);
    xn->add_option("--n", *xn_n, "Exponent n >= 3");
    xn->callback(wrap([xn_c, xn_n] {
        Json config = common_config("xn-check", *xn_c);
        config["n"] = *xn_n;
        return emit_or_selftest("xn-check", *xn_c, config, [&](Json& result, std::optional<Table>&) {
            auto rep = xn_family_check(*xn_n);
            result["verdict"] =
                rep.report.verdict == Verdict::NonDegenerate ? "NonDegenerate" : "Inconclusive";
            result["closed_form_match"] = rep.closed_form_match;
        });
    }));

    // ---- eliminate ----
    auto* el = app.add_subcommand("eliminate", "Eliminate two variables by iterated resultants");
    auto el_c = std::make_shared<Common>();
    auto el_p1 = std::make_shared<std::string>();
    auto el_p2 = std::make_shared<std::string>();
    auto el_p3 = std::make_shared<std::string>();
    auto el_u = std::make_shared<std::string>();
    auto el_v = std::make_shared<std::string>();
    auto el_strip = std::make_shared<std::string>();
    add_common(el, *el_c);
    el->add_option("--p1", *el_p1, "First system polynomial");
    el->add_option("--p2", *el_p2, "Second system polynomial");
    el->add_option("--p3", *el_p3, "Third system polynomial");
    el->add_option("--u", *el_u, "First eliminated variable");
    el->add_option("--v", *el_v, "Second eliminated variable");
    el->add_option("--strip", *el_strip, "Known extraneous factor to divide out");
    el->callback(wrap([el_c, el_p1, el_p2, el_p3, el_u, el_v, el_strip] {
        Json config = common_config("eliminate", *el_c);
        config["p1"] = *el_p1;
        config["p2"] = *el_p2;
        config["p3"] = *el_p3;
        config["u"] = *el_u;
        config["v"] = *el_v;
        config["strip"] = *el_strip;
        return emit_or_selftest("eliminate", *el_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!el_p1->empty() && !el_p2->empty() && !el_p3->empty(),
                        "need --p1, --p2 and --p3");
            CVX_REQUIRE(!el_u->empty() && !el_v->empty(), "need --u and --v");
            Polynomial out = eliminate_two(parse_polynomial(*el_p1), parse_polynomial(*el_p2),
                                           parse_polynomial(*el_p3), var(*el_u), var(*el_v));
            result["eliminant"] = print_canonical(out);
            if (!el_strip->empty()) {
                auto q = out.divided_exactly(parse_polynomial(*el_strip));
                CVX_REQUIRE(q.has_value(), "strip factor does not divide the eliminant");
                result["stripped"] = print_canonical(*q);
            }
        });
    }));

    // ---- verify-param ----
    auto* vp = app.add_subcommand("verify-param", "Check that p vanishes under a parametrization");
    auto vp_c = std::make_shared<Common>();
    auto vp_p = std::make_shared<std::string>();
    auto vp_subs = std::make_shared<std::vector<std::string>>();
    auto vp_builtin = std::make_shared<std::string>();
    add_common(vp, *vp_c);
    vp->add_option("--p", *vp_p, "Polynomial to test");
    vp->add_option("--sub", *vp_subs, "Substitution name=expression (repeatable)");
    vp->add_option("--builtin", *vp_builtin,
                   "Built-in instance: 'surface-G' or 'lemma-main'");
    vp->callback(wrap([vp_c, vp_p, vp_subs, vp_builtin] {
        Json config = common_config("verify-param", *vp_c);
        config["p"] = *vp_p;
        config["sub"] = *vp_subs;
        config["builtin"] = *vp_builtin;
        return emit_or_selftest("verify-param", *vp_c, config, [&](Json& result, std::optional<Table>&) {
            Polynomial p;
            std::map<Var, RationalFunction> subst;
            if (*vp_builtin == "surface-G") {
                p = surface_G();
                subst = system_parametrization();
            } else if (*vp_builtin == "lemma-main") {
                p = surface_F();
                subst.emplace(var("x"), parse_rational_function("a - b"));
                subst.emplace(var("y"), parse_rational_function("a^2 - b^2"));
                subst.emplace(var("z"), parse_rational_function("a^3 - b^3"));
            } else {
                CVX_REQUIRE(!vp_p->empty(), "missing --p");
                p = parse_polynomial(*vp_p);
                for (const auto& s : *vp_subs) {
                    auto eq = s.find('=');
                    CVX_REQUIRE(eq != std::string::npos, "substitution must be name=expression");
                    subst.emplace(var(s.substr(0, eq)),
                                  parse_rational_function(s.substr(eq + 1)));
                }
            }
            result["vanishes"] = verify_parametrization(p, subst);
        });
    }));

    // ---- count-surface ----
    auto* cs = app.add_subcommand("count-surface", "Count |Z(F) cap (A x B x C)|");
    auto cs_c = std::make_shared<Common>();
    auto cs_f = std::make_shared<std::string>("4*x*z - 3*y^2 - x^4");
    auto cs_a = std::make_shared<std::string>();
    auto cs_b = std::make_shared<std::string>();
    auto cs_cfile = std::make_shared<std::string>();
    auto cs_method = std::make_shared<std::string>("both");
    add_common(cs, *cs_c);
    cs->add_option("--f", *cs_f, "Surface polynomial in x, y, z");
    cs->add_option("--a", *cs_a, "Set file for A");
    cs->add_option("--b", *cs_b, "Set file for B");
    cs->add_option("--c", *cs_cfile, "Set file for C");
    cs->add_option("--method", *cs_method, "naive, root or both")
        ->check(CLI::IsMember({"naive", "root", "both"}));
    cs->callback(wrap([cs_c, cs_f, cs_a, cs_b, cs_cfile, cs_method] {
        Json config = common_config("count-surface", *cs_c);
        config["f"] = *cs_f;
        config["a"] = *cs_a;
        config["b"] = *cs_b;
        config["c"] = *cs_cfile;
        config["method"] = *cs_method;
        return emit_or_selftest("count-surface", *cs_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!cs_a->empty() && !cs_b->empty() && !cs_cfile->empty(),
                        "need --a, --b and --c set files");
            auto spec = SurfaceSpec::of(parse_polynomial(*cs_f), var("x"), var("y"), var("z"));
            QSet A = read_set_file(*cs_a), B = read_set_file(*cs_b), C = read_set_file(*cs_cfile);
            if (*cs_method != "root") {
                auto rep = count_naive(spec, A, B, C);
                result["naive_count"] = rep.count;
                result["bound"] = bracket_json(rep.bound);
            }
            if (*cs_method != "naive") {
                auto rep = count_root_based(spec, A, B, C);
                result["root_based_count"] = rep.count;
                result["degenerate_fiber"] = rep.degenerate_fiber;
                if (*cs_method == "root") result["bound"] = bracket_json(rep.bound);
            }
            if (*cs_method == "both") {
                CVX_CHECK(result["naive_count"] == result["root_based_count"],
                          "counting methods disagree");
            }
            if (spec.missing_role_warning)
                result["warning"] = "surface does not use every designated variable";
        });
    }));

    // ---- es-scan ----
    auto* es = app.add_subcommand("es-scan", "Count scan across a family of sets");
    auto es_c = std::make_shared<Common>();
    auto es_f = std::make_shared<std::string>("x + y - z");
    auto es_family = std::make_shared<std::string>("ap");
    auto es_min = std::make_shared<std::size_t>(4);
    auto es_max = std::make_shared<std::size_t>(16);
    auto es_mode = std::make_shared<std::string>("direct");
    add_common(es, *es_c);
    es->add_option("--f", *es_f, "Surface polynomial in x, y, z");
    es->add_option("--family", *es_family, "Set family");
    es->add_option("--n-min", *es_min, "Smallest n");
    es->add_option("--n-max", *es_max, "Largest n");
    es->add_option("--mode", *es_mode, "direct (A=B=C=family) or cde (lemma-main sets)")
        ->check(CLI::IsMember({"direct", "cde"}));
    es->callback(wrap([es_c, es_f, es_family, es_min, es_max, es_mode] {
        Json config = common_config("es-scan", *es_c);
        config["f"] = *es_f;
        config["family"] = *es_family;
        config["n_min"] = *es_min;
        config["n_max"] = *es_max;
        config["mode"] = *es_mode;
        return emit_or_selftest("es-scan", *es_c, config, [&](Json& result, std::optional<Table>& table) {
            auto spec = SurfaceSpec::of(parse_polynomial(*es_f), var("x"), var("y"), var("z"));
            auto rows = es_scan(spec, family_from_name(*es_family), FamilyParams{}, es_c->seed,
                                *es_min, *es_max,
                                *es_mode == "cde" ? EsScanMode::Cde : EsScanMode::Direct);
            Table t;
            t.header = {"n", "size_a", "size_b", "size_c", "count", "comparator_lo",
                        "comparator_hi", "log_ratio"};
            for (const auto& r : rows)
                t.rows.push_back({std::to_string(r.n), std::to_string(r.size_a),
                                  std::to_string(r.size_b), std::to_string(r.size_c),
                                  std::to_string(r.count), decimal_floor(r.comparator.lo, 6),
                                  decimal_ceil(r.comparator.hi, 6), r.log_ratio});
            table = std::move(t);
            result["rows"] = rows.size();
        });
    }));

    // ---- sumset ----
    auto* su = app.add_subcommand("sumset", "Arithmetic combination of two sets");
    auto su_c = std::make_shared<Common>();
    auto su_op = std::make_shared<std::string>("sum");
    auto su_a = std::make_shared<std::string>();
    auto su_b = std::make_shared<std::string>();
    auto su_k = std::make_shared<unsigned>(1);
    add_common(su, *su_c);
    su->add_option("--op", *su_op, "sum, diff, prod or ratio")
        ->check(CLI::IsMember({"sum", "diff", "prod", "ratio"}));
    su->add_option("--a", *su_a, "Set file for A");
    su->add_option("--b", *su_b, "Set file for B (defaults to A)");
    su->add_option("--k", *su_k, "k-fold iterated combination of A with itself");
    su->callback(wrap([su_c, su_op, su_a, su_b, su_k] {
        Json config = common_config("sumset", *su_c);
        config["op"] = *su_op;
        config["a"] = *su_a;
        config["b"] = *su_b;
        config["k"] = *su_k;
        return emit_or_selftest("sumset", *su_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!su_a->empty(), "need --a set file");
            QSet A = read_set_file(*su_a);
            QSet out;
            if (*su_k > 1) {
                out = combine_kfold(setop_from_name(*su_op), A, *su_k);
            } else {
                QSet B = su_b->empty() ? A : read_set_file(*su_b);
                out = combine(setop_from_name(*su_op), A, B);
            }
            result["size"] = out.size();
            result["set"] = qset_json(out);
        });
    }));

    // ---- restricted ----
    auto* re = app.add_subcommand("restricted", "Combination restricted to a pair graph");
    auto re_c = std::make_shared<Common>();
    auto re_op = std::make_shared<std::string>("diff");
    auto re_a = std::make_shared<std::string>();
    auto re_b = std::make_shared<std::string>();
    auto re_pairs = std::make_shared<std::string>();
    auto re_consecutive = std::make_shared<bool>(false);
    add_common(re, *re_c);
    re->add_option("--op", *re_op, "sum, diff, prod or ratio")
        ->check(CLI::IsMember({"sum", "diff", "prod", "ratio"}));
    re->add_option("--a", *re_a, "Set file for the left set");
    re->add_option("--b", *re_b, "Set file for the right set (defaults to A)");
    re->add_option("--pairs", *re_pairs, "Pairs file (1-based 'i j' lines)");
    re->add_flag("--consecutive", *re_consecutive, "Use consecutive pairs of A");
    re->callback(wrap([re_c, re_op, re_a, re_b, re_pairs, re_consecutive] {
        Json config = common_config("restricted", *re_c);
        config["op"] = *re_op;
        config["a"] = *re_a;
        config["b"] = *re_b;
        config["pairs"] = *re_pairs;
        config["consecutive"] = *re_consecutive;
        return emit_or_selftest("restricted", *re_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!re_a->empty(), "need --a set file");
            QSet A = read_set_file(*re_a);
            PairGraph G = *re_consecutive
                              ? PairGraph::consecutive(A)
                              : PairGraph::of(A, re_b->empty() ? A : read_set_file(*re_b),
                                              read_pairs_file(*re_pairs));
            QSet out = combine_restricted(setop_from_name(*re_op), G);
            result["pairs"] = G.pairs.size();
            result["size"] = out.size();
            result["set"] = qset_json(out);
        });
    }));

    // ---- diffs ----
    auto* di = app.add_subcommand("diffs", "Consecutive-difference multiplicities");
    auto di_c = std::make_shared<Common>();
    auto di_a = std::make_shared<std::string>();
    add_common(di, *di_c);
    di->add_option("--a", *di_a, "Set file");
    di->callback(wrap([di_c, di_a] {
        Json config = common_config("diffs", *di_c);
        config["a"] = *di_a;
        return emit_or_selftest("diffs", *di_c, config, [&](Json& result, std::optional<Table>& table) {
            CVX_REQUIRE(!di_a->empty(), "need --a set file");
            auto m = consecutive_differences(read_set_file(*di_a));
            Table t;
            t.header = {"difference", "count"};
            for (const auto& [k, v] : m.entries())
                t.rows.push_back({k.str(), std::to_string(v)});
            table = std::move(t);
            result["total"] = m.total();
        });
    }));

    // ---- pigeonhole ----
    auto* pi = app.add_subcommand("pigeonhole", "Dyadic level of the gap multiplicities");
    auto pi_c = std::make_shared<Common>();
    auto pi_a = std::make_shared<std::string>();
    add_common(pi, *pi_c);
    pi->add_option("--a", *pi_a, "Set file");
    pi->callback(wrap([pi_c, pi_a] {
        Json config = common_config("pigeonhole", *pi_c);
        config["a"] = *pi_a;
        return emit_or_selftest("pigeonhole", *pi_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!pi_a->empty(), "need --a set file");
            auto lvl = dyadic_pigeonhole(consecutive_differences(read_set_file(*pi_a)));
            result["L"] = lvl.L;
            result["covered_mass"] = lvl.covered_mass;
            result["level_set"] = qset_json(lvl.level_set);
        });
    }));

    // ---- squeeze ----
    auto* sq = app.add_subcommand("squeeze", "Gap-squeezing witnesses for A+A-A");
    auto sq_c = std::make_shared<Common>();
    auto sq_a = std::make_shared<std::string>();
    auto sq_d = std::make_shared<std::string>();
    auto sq_l = std::make_shared<std::int64_t>(0);
    add_common(sq, *sq_c);
    sq->add_option("--a", *sq_a, "Set file for A");
    sq->add_option("--dprime", *sq_d, "Set file for D' (default: dyadic level of the gaps)");
    sq->add_option("--L", *sq_l, "Multiplicity floor (default: the dyadic level's L)");
    sq->callback(wrap([sq_c, sq_a, sq_d, sq_l] {
        Json config = common_config("squeeze", *sq_c);
        config["a"] = *sq_a;
        config["dprime"] = *sq_d;
        config["L"] = *sq_l;
        return emit_or_selftest("squeeze", *sq_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!sq_a->empty(), "need --a set file");
            QSet A = read_set_file(*sq_a);
            QSet D;
            std::int64_t L = *sq_l;
            if (sq_d->empty()) {
                auto lvl = dyadic_pigeonhole(consecutive_differences(A));
                D = lvl.level_set;
                if (L == 0) L = lvl.L;
            } else {
                D = read_set_file(*sq_d);
                if (L == 0) L = 1;
            }
            auto rep = squeeze_witnesses(A, D, L);
            result["dprime"] = qset_json(D);
            result["L"] = L;
            result["report"] = witness_json(rep, sq_c->witnesses);
        });
    }));

    // ---- theorem1 ----
    auto* t1 = app.add_subcommand("theorem1", "Three-stage chained pipeline");
    auto t1_c = std::make_shared<Common>();
    auto t1_a = std::make_shared<std::string>();
    auto t1_family = std::make_shared<std::string>();
    auto t1_n = std::make_shared<std::size_t>(16);
    add_common(t1, *t1_c);
    t1->add_option("--a", *t1_a, "Set file for A");
    t1->add_option("--family", *t1_family, "Family to generate A from");
    t1->add_option("--n", *t1_n, "Family size");
    t1->callback(wrap([t1_c, t1_a, t1_family, t1_n] {
        Json config = common_config("theorem1", *t1_c);
        config["a"] = *t1_a;
        config["family"] = *t1_family;
        config["n"] = *t1_n;
        return emit_or_selftest("theorem1", *t1_c, config, [&](Json& result, std::optional<Table>&) {
            QSet A;
            if (!t1_a->empty())
                A = read_set_file(*t1_a);
            else if (!t1_family->empty())
                A = family(family_from_name(*t1_family), *t1_n, FamilyParams{}, t1_c->seed);
            else
                throw PreconditionError("need --a or --family");
            auto rep = theorem1_pipeline(A);
            const char* names[3] = {"stage1", "stage2", "stage3"};
            for (int k = 0; k < 3; ++k) {
                Json s;
                s["L"] = rep.stages[k].level.L;
                s["covered_mass"] = rep.stages[k].level.covered_mass;
                s["floor"] = rep.stages[k].floor;
                s["graph_size"] = rep.stages[k].mass;
                s["restricted_set_size"] = rep.stages[k].restricted_set.size();
                result[names[k]] = std::move(s);
            }
            result["full_sizes"] = {rep.full_sizes[0], rep.full_sizes[1], rep.full_sizes[2]};
            result["final_max"] = rep.final_max;
            result["n_19_12"] = bracket_json(rep.comparison);
        });
    }));

    // ---- squeeze2 ----
    auto* s2 = app.add_subcommand("squeeze2", "Two-fold squeeze on interleaved Y, Z");
    auto s2_c = std::make_shared<Common>();
    auto s2_y = std::make_shared<std::string>();
    auto s2_z = std::make_shared<std::string>();
    auto s2_i = std::make_shared<std::string>();
    auto s2_mode = std::make_shared<std::string>("additive");
    add_common(s2, *s2_c);
    s2->add_option("--y", *s2_y, "Set file for Y");
    s2->add_option("--z", *s2_z, "Set file for Z");
    s2->add_option("--i", *s2_i, "Comma-separated 1-based index set I");
    s2->add_option("--mode", *s2_mode, "additive or multiplicative")
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    s2->callback(wrap([s2_c, s2_y, s2_z, s2_i, s2_mode] {
        Json config = common_config("squeeze2", *s2_c);
        config["y"] = *s2_y;
        config["z"] = *s2_z;
        config["i"] = *s2_i;
        config["mode"] = *s2_mode;
        return emit_or_selftest("squeeze2", *s2_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!s2_y->empty() && !s2_z->empty(), "need --y and --z set files");
            auto res = squeeze2(read_set_file(*s2_y), read_set_file(*s2_z),
                                parse_index_list(*s2_i),
                                *s2_mode == "additive" ? GroupMode::Additive
                                                       : GroupMode::Multiplicative);
            result["iprime"] = index_list_json(res.Iprime);
            result["gamma_prime"] = qset_json(res.Gamma_prime);
            result["report"] = witness_json(res.report, s2_c->witnesses);
        });
    }));

    // ---- main22 ----
    auto* m22 = app.add_subcommand("main22", "Multiplicative pipeline on a positive set");
    auto m22_c = std::make_shared<Common>();
    auto m22_x = std::make_shared<std::string>();
    auto m22_family = std::make_shared<std::string>();
    auto m22_n = std::make_shared<std::size_t>(18);
    add_common(m22, *m22_c);
    m22->add_option("--x", *m22_x, "Set file for X");
    m22->add_option("--family", *m22_family, "Family to generate X from");
    m22->add_option("--n", *m22_n, "Family size");
    m22->callback(wrap([m22_c, m22_x, m22_family, m22_n] {
        Json config = common_config("main22", *m22_c);
        config["x"] = *m22_x;
        config["family"] = *m22_family;
        config["n"] = *m22_n;
        return emit_or_selftest("main22", *m22_c, config, [&](Json& result, std::optional<Table>&) {
            QSet X;
            if (!m22_x->empty())
                X = read_set_file(*m22_x);
            else if (!m22_family->empty())
                X = family(family_from_name(*m22_family), *m22_n, FamilyParams{}, m22_c->seed);
            else
                throw PreconditionError("need --x or --family");
            auto rep = main22_pipeline(X);
            result["chosen_index"] = rep.chosen_index;
            result["block"] = {rep.block[0].str(), rep.block[1].str(), rep.block[2].str(),
                               rep.block[3].str()};
            result["I1"] = index_list_json(rep.I1);
            result["I2"] = index_list_json(rep.I2);
            result["I3"] = index_list_json(rep.I3);
            result["exp_gamma"] = qset_json(rep.exp_gamma);
            result["exp_delta"] = qset_json(rep.exp_delta);
            result["exp_epsilon"] = qset_json(rep.exp_epsilon);
            result["S"] = rep.S;
            result["surface_count"] = rep.surface_count;
            result["best_stage"] = rep.best_stage + 1;
            result["pair"] = {rep.pair_a.str(), rep.pair_aprime.str()};
            for (int k = 0; k < 3; ++k)
                result["stage_report_" + std::to_string(k + 1)] =
                    witness_json(rep.stage_reports[k], m22_c->witnesses);
        });
    }));

    // ---- expander ----
    auto* ex = app.add_subcommand("expander", "Shifted-product ratio set");
    auto ex_c = std::make_shared<Common>();
    auto ex_x = std::make_shared<std::string>();
    auto ex_xval = std::make_shared<std::string>();
    auto ex_xprime = std::make_shared<std::string>();
    auto ex_lambda = std::make_shared<std::string>("1");
    add_common(ex, *ex_c);
    ex->add_option("--x", *ex_x, "Set file for X");
    ex->add_option("--xval", *ex_xval, "Shift x (omit both shifts for best-pair search)");
    ex->add_option("--xprime", *ex_xprime, "Shift x'");
    ex->add_option("--lambda", *ex_lambda, "Shift offset lambda as p/q");
    ex->callback(wrap([ex_c, ex_x, ex_xval, ex_xprime, ex_lambda] {
        Json config = common_config("expander", *ex_c);
        config["x"] = *ex_x;
        config["xval"] = *ex_xval;
        config["xprime"] = *ex_xprime;
        config["lambda"] = *ex_lambda;
        return emit_or_selftest("expander", *ex_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!ex_x->empty(), "need --x set file");
            QSet X = read_set_file(*ex_x);
            Rational lambda = Rational::from_string(*ex_lambda);
            if (ex_xval->empty() && ex_xprime->empty()) {
                auto best = expander_best_pair(X, lambda);
                result["x"] = best.x.str();
                result["xprime"] = best.xprime.str();
                result["size"] = best.size;
                result["exponent_reading"] = best.exponent_reading;
                if (ex_c->witnesses) result["set"] = qset_json(best.set);
            } else {
                CVX_REQUIRE(!ex_xval->empty() && !ex_xprime->empty(),
                            "give both --xval and --xprime, or neither");
                QSet out = expander_set(X, Rational::from_string(*ex_xval),
                                        Rational::from_string(*ex_xprime), lambda);
                result["size"] = out.size();
                if (ex_c->witnesses)
                    result["set"] = qset_json(out);
            }
        });
    }));

    // ---- expander-scan ----
    auto* xs = app.add_subcommand("expander-scan", "Best-pair scan across a family");
    auto xs_c = std::make_shared<Common>();
    auto xs_family = std::make_shared<std::string>("ap");
    auto xs_min = std::make_shared<std::size_t>(3);
    auto xs_max = std::make_shared<std::size_t>(8);
    auto xs_lambda = std::make_shared<std::string>("1");
    auto xs_budget = std::make_shared<std::size_t>(10);
    add_common(xs, *xs_c);
    xs->add_option("--family", *xs_family, "Set family");
    xs->add_option("--n-min", *xs_min, "Smallest n");
    xs->add_option("--n-max", *xs_max, "Largest n");
    xs->add_option("--lambda", *xs_lambda, "Shift offset lambda as p/q");
    xs->add_option("--budget", *xs_budget, "Largest n searched exhaustively");
    xs->callback(wrap([xs_c, xs_family, xs_min, xs_max, xs_lambda, xs_budget] {
        Json config = common_config("expander-scan", *xs_c);
        config["family"] = *xs_family;
        config["n_min"] = *xs_min;
        config["n_max"] = *xs_max;
        config["lambda"] = *xs_lambda;
        config["budget"] = *xs_budget;
        return emit_or_selftest("expander-scan", *xs_c, config,
                                [&](Json& result, std::optional<Table>& table) {
            auto rows = expander_scan(family_from_name(*xs_family), FamilyParams{}, xs_c->seed,
                                      *xs_min, *xs_max, Rational::from_string(*xs_lambda),
                                      !xs_c->no_timing, *xs_budget);
            Table t;
            t.header = {"n", "x", "xprime", "size", "exponent_reading", "millis"};
            for (const auto& r : rows) {
                if (r.truncated) {
                    t.rows.push_back({std::to_string(r.n), "", "", "", "truncated", ""});
                } else {
                    t.rows.push_back({std::to_string(r.n), r.x.str(), r.xprime.str(),
                                      std::to_string(r.size), r.exponent_reading, r.millis});
                }
            }
            table = std::move(t);
            result["rows"] = rows.size();
        });
    }));

    // ---- lemma-main ----
    auto* lm = app.add_subcommand("lemma-main", "Instance check of the double-count lemma");
    auto lm_c = std::make_shared<Common>();
    auto lm_a = std::make_shared<std::string>();
    auto lm_pairs = std::make_shared<std::string>();
    auto lm_consecutive = std::make_shared<bool>(false);
    add_common(lm, *lm_c);
    lm->add_option("--a", *lm_a, "Set file for A");
    lm->add_option("--pairs", *lm_pairs, "Pairs file (1-based 'i j' lines)");
    lm->add_flag("--consecutive", *lm_consecutive, "Use consecutive pairs of A");
    lm->callback(wrap([lm_c, lm_a, lm_pairs, lm_consecutive] {
        Json config = common_config("lemma-main", *lm_c);
        config["a"] = *lm_a;
        config["pairs"] = *lm_pairs;
        config["consecutive"] = *lm_consecutive;
        return emit_or_selftest("lemma-main", *lm_c, config, [&](Json& result, std::optional<Table>&) {
            CVX_REQUIRE(!lm_a->empty(), "need --a set file");
            QSet A = read_set_file(*lm_a);
            PairGraph G = *lm_consecutive
                              ? PairGraph::consecutive(A)
                              : PairGraph::of(A, A, read_pairs_file(*lm_pairs));
            auto rep = lemma_main_check(A, G);
            result["S"] = rep.S;
            result["C"] = qset_json(rep.C);
            result["D"] = qset_json(rep.D);
            result["E"] = qset_json(rep.E);
            result["zero_count"] = rep.zero_count;
            result["max_set_size"] = rep.max_set_size;
            result["g_7_12"] = bracket_json(rep.g_exponent_bound);
        });
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are precondition errors
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cvx::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cvx::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
