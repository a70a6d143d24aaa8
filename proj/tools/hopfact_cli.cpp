// Command-line surface for the exact Hopf-algebra action toolkit.
// Output is JSON by default (--format tsv where tabular), deterministic for
// identical invocations.  Exit codes: 0 ok, 2 usage error, 3 verification
// failure.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfact/action.hpp"
#include "hopfact/cokertab.hpp"
#include "hopfact/nilrep.hpp"
#include "hopfact/pbw.hpp"
#include "hopfact/symfunc.hpp"
#include "hopfact/verify.hpp"

using namespace hopfact;
using nlohmann::json;

namespace {

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

HopfDescriptor make_desc(const std::string& kind, int dim, int truncation) {
    HopfDescriptor d;
    if (kind == "tensor") d.kind = HopfKind::TensorAlgebra;
    else if (kind == "nil2") d.kind = HopfKind::EnvelopingNil2;
    else throw CLI::ValidationError("--kind must be tensor or nil2");
    d.dim_v = dim;
    d.truncation = truncation;
    return d;
}

NielsenSeq parse_aut(const std::string& text) {
    // either a JSON {"nielsen": [...]} or a ';'-separated list
    if (!text.empty() && text[0] == '{') {
        json j = json::parse(text);
        std::vector<std::string> items = j.at("nielsen").get<std::vector<std::string>>();
        return parse_nielsen_seq(items);
    }
    std::vector<std::string> items;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ';'))
        if (tok.find_first_not_of(" \t") != std::string::npos) items.push_back(tok);
    return parse_nielsen_seq(items);
}

int run_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format) {
    VerifyReport rep = run_suite(suite, opt);
    if (format == "tsv") {
        std::cout << "check\tpass\tdetail\n";
        for (const auto& c : rep.checks)
            std::cout << c.name << "\t" << (c.pass ? "pass" : "FAIL") << "\t" << c.detail << "\n";
    } else {
        json out;
        out["suite"] = rep.suite;
        out["pass"] = rep.all_pass();
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
    }
    return rep.all_pass() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with the Aut(F_n) action on Hopf-algebra tensor powers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    std::string kind = "tensor";
    int dim = 2, truncation = 8, n = 2, karg = 1, degree = 0, weight = 12, sarg = 1;
    int max_degree = 12, span = 1;
    unsigned seed = 1;
    std::string lambda_s = "1", aut_s, op, suite;

    auto* hopf_eval = app.add_subcommand("hopf-eval", "evaluate a Hopf operation on JSON input");
    hopf_eval->add_option("--op", op, "mul|coproduct|antipode|counit|bracket")->required();
    hopf_eval->add_option("--k", karg, "iteration count for coproduct");

    auto* act_cmd = app.add_subcommand("act", "apply a Nielsen automorphism to a tensor from stdin");
    act_cmd->add_option("--aut", aut_s, "e.g. \"leftmul 1 2; invert 2\" or {\"nielsen\": [...]}")->required();

    auto* qred = app.add_subcommand("quotient-reduce", "canonical representative mod the conjugation subspace");

    auto* efd = app.add_subcommand("ef-defect", "sl2 defect of the matrix-log generators on T(V), dim 2");

    auto* str = app.add_subcommand("straighten", "Heisenberg straightening constants");
    str->add_option("--n", n)->required();
    str->add_option("--k", karg)->required();

    auto* schur_cmd = app.add_subcommand("schur", "symmetric-function computations");
    schur_cmd->require_subcommand(1);
    std::string lam_a = "1", lam_b = "1";
    auto* smult = schur_cmd->add_subcommand("mult", "Littlewood-Richardson product");
    smult->add_option("--a", lam_a)->required();
    smult->add_option("--b", lam_b)->required();
    auto* swedge = schur_cmd->add_subcommand("wedge2", "S_lambda(wedge^2 V)");
    swedge->add_option("--lambda", lambda_s)->required();
    auto* ssum = schur_cmd->add_subcommand("of-sum", "LR decomposition of S_lambda(V + W)");
    ssum->add_option("--lambda", lambda_s)->required();
    auto* sl2 = schur_cmd->add_subcommand("of-L2", "graded character of S_lambda(V + wedge^2 V)");
    sl2->add_option("--lambda", lambda_s)->required();

    auto* qchar = app.add_subcommand("quotient-char", "character of the adjoint-coinvariant quotient");
    qchar->add_option("--lambda", lambda_s)->required();
    qchar->add_option("--degree", degree)->required();
    int rank_override = 0;
    qchar->add_option("--dimv", rank_override, "rank of V (default: smallest faithful)");

    auto* h1 = app.add_subcommand("h1-table", "obstruction table of the H^1 decomposition");
    h1->add_option("--max-degree", max_degree)->required();
    h1->add_option("--span", span, "module degrees per family above |lambda| (default 1)");

    auto* dims = app.add_subcommand("dims", "dimension utilities");
    dims->require_subcommand(1);
    auto* dwitt = dims->add_subcommand("witt", "free Lie algebra degree dimension");
    dwitt->add_option("--dim", dim)->required();
    dwitt->add_option("--k", karg)->required();
    auto* ddsp = dims->add_subcommand("dspace", "dim D_s(V) with explicit cross-check");
    ddsp->add_option("--dim", dim)->required();
    ddsp->add_option("--s", sarg)->required();
    auto* dcyc = dims->add_subcommand("cyclic", "cyclic word dimensions");
    dcyc->add_option("--dim", dim)->required();
    dcyc->add_option("--k", karg)->required();
    auto* dmod = dims->add_subcommand("modular", "dim M_w and S_w");
    dmod->add_option("--weight", weight)->required();

    int verify_maxdeg = 4;
    auto* verify = app.add_subcommand("verify", "run a named property suite");
    verify->add_option("suite", suite)->required();
    verify->add_option("--dim", dim);
    verify->add_option("--max-degree", verify_maxdeg);
    verify->add_option("--seed", seed);

    for (auto* sc : {hopf_eval, act_cmd, qred}) {
        sc->add_option("--kind", kind, "tensor|nil2");
        sc->add_option("--dim", dim);
        sc->add_option("--truncation", truncation);
        sc->add_option("--n", n, "tensor arity / free group rank");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hopf_eval) {
            json in = json::parse(read_stdin());
            if (op == "mul" || op == "bracket") {
                AlgebraElement a = algebra_from_json(in.at("a").dump());
                AlgebraElement b = algebra_from_json(in.at("b").dump());
                AlgebraElement r = op == "mul" ? mul(a, b) : lie_bracket(a, b);
                std::cout << to_json(r, 2) << "\n";
            } else if (op == "coproduct") {
                AlgebraElement a = algebra_from_json(in.at("a").dump());
                std::cout << to_json(coproduct_iter(a, karg), 2) << "\n";
            } else if (op == "antipode") {
                AlgebraElement a = algebra_from_json(in.at("a").dump());
                std::cout << to_json(antipode(a), 2) << "\n";
            } else if (op == "counit") {
                AlgebraElement a = algebra_from_json(in.at("a").dump());
                std::cout << json{{"value", rat_str(counit(a))}}.dump(2) << "\n";
            } else {
                std::cerr << "unknown --op " << op << "\n";
                return 2;
            }
        } else if (*act_cmd) {
            TensorElement t = tensor_from_json(read_stdin());
            ActionContext ctx{t.desc, t.arity};
            std::cout << to_json(act(ctx, parse_aut(aut_s), t), 2) << "\n";
        } else if (*qred) {
            TensorElement t = tensor_from_json(read_stdin());
            QuotientModule qm(ActionContext{t.desc, t.arity});
            std::cout << to_json(qm.quotient_reduce(t), 2) << "\n";
        } else if (*efd) {
            json out = json::array();
            for (auto [conv, name] : {std::pair{EfConvention::LiftA, "lift-a (x2 -> x2 x1)"},
                                      std::pair{EfConvention::LiftB, "lift-b (x1 -> x1 x2)"},
                                      std::pair{EfConvention::GrMatched, "gr-matched"}}) {
                EfDefectResult r = ef_defect(conv);
                out.push_back(json{{"convention", name},
                                   {"proportional", r.proportional},
                                   {"scalar", rat_str(r.scalar)},
                                   {"nonzero_in_quotient", r.u_nonzero_in_quotient},
                                   {"matches_reference_constant_24", r.scalar == Rational(24)},
                                   {"nilpotency", {r.nilpotency_upper, r.nilpotency_lower}}});
            }
            std::cout << out.dump(2) << "\n";
        } else if (*str) {
            auto sc = straighten_constants(n, karg);
            json out{{"n", n}, {"k", karg}, {"leading_c", rat_str(sc.leading_c)},
                     {"leading_d", rat_str(sc.leading_d)}};
            json cs = json::array(), ds = json::array();
            for (const auto& c : sc.c) cs.push_back(rat_str(c));
            for (const auto& c : sc.d) ds.push_back(rat_str(c));
            out["c"] = cs;
            out["d"] = ds;
            std::cout << out.dump(2) << "\n";
        } else if (*smult) {
            std::cout << schur_to_json(lr_mult(schur(parse_partition(lam_a)),
                                               schur(parse_partition(lam_b))), 2)
                      << "\n";
        } else if (*swedge) {
            std::cout << schur_to_json(schur_of_wedge2(parse_partition(lambda_s)), 2) << "\n";
        } else if (*ssum) {
            json arr = json::array();
            for (const auto& [mu, nu, c] : schur_of_sum(parse_partition(lambda_s)))
                arr.push_back(json{{"mu", mu}, {"nu", nu}, {"mult", c}});
            std::cout << arr.dump(2) << "\n";
        } else if (*sl2) {
            json out;
            for (const auto& [deg, poly] : schur_of_L2(parse_partition(lambda_s)))
                out[std::to_string(deg)] = json::parse(schur_to_json(poly));
            std::cout << out.dump(2) << "\n";
        } else if (*qchar) {
            Partition lam = parse_partition(lambda_s);
            int d = rank_override > 0 ? rank_override : required_rank(lam, degree);
            SchurPoly ch = quotient_character(lam, degree, d);
            if (format == "tsv") {
                std::cout << "lambda\tmult\n";
                for (const auto& [p, m] : ch.terms)
                    std::cout << format_partition(p) << "\t" << m << "\n";
            } else {
                json out = json::parse(schur_to_json(ch));
                out["lambda"] = lam;
                out["degree"] = degree;
                out["rank"] = d;
                out["note"] = "GL(V) labels; the stable [lambda]_Sp sits inside [lambda]_GL";
                std::cout << out.dump(2) << "\n";
            }
        } else if (*h1) {
            auto table = h1_table(max_degree, span);
            if (format == "tsv") std::cout << table_to_tsv(table);
            else std::cout << table_to_json(table, 2) << "\n";
        } else if (*dwitt) {
            std::cout << json{{"dim", dim}, {"k", karg}, {"witt", witt_dim(dim, karg)}}.dump(2) << "\n";
        } else if (*ddsp) {
            auto r = d_space_check(dim, sarg);
            std::cout << json{{"dim", dim},
                              {"s", sarg},
                              {"formula", r.dim_formula},
                              {"explicit", r.dim_explicit},
                              {"bracketing_surjective", r.bracketing_surjective}}
                             .dump(2)
                      << "\n";
        } else if (*dcyc) {
            auto r = cyclic_word_dims(dim, karg);
            std::cout << json{{"dim", dim},
                              {"k", karg},
                              {"cyclic", r.cyclic},
                              {"cyclic_explicit", r.cyclic_explicit},
                              {"antisymmetric", r.antisymmetric}}
                             .dump(2)
                      << "\n";
        } else if (*dmod) {
            auto [m, s] = modular_dims(weight);
            std::cout << json{{"weight", weight}, {"modular", m}, {"cusp", s}}.dump(2) << "\n";
        } else if (*verify) {
            VerifyOptions opt;
            opt.dim = dim;
            opt.max_degree = verify_maxdeg;
            opt.seed = seed;
            return run_verify(suite, opt, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
