// Command-line frontend: computation and verification with text and JSON
// output. Exit codes: 0 success/pass, 1 claim failure or domain error,
// 2 usage error.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jkl/verify.hpp"

namespace jkl {

namespace cli_detail {

struct Config {
    int n = 3;
    int degree = 4;
    std::string format = "json";
};

inline void validate(const Config& cfg, bool decomposition_command) {
    if (cfg.n < 2 || cfg.n > 12) throw error("n out of range (2..12)");
    if (decomposition_command && cfg.n > 8)
        throw error("decomposition commands are bounded by n <= 8");
    if (cfg.degree < 1 || cfg.degree > 6) throw error("degree out of range (1..6)");
}

inline ModulePtr parse_module_expr(detail::Cursor& c, int n) {
    auto keyword = [&](const char* kw) {
        for (const char* p = kw; *p; ++p)
            if (!c.accept(*p)) {
                if (p != kw) c.fail(std::string("expected \"") + kw + "\"");
                return false;
            }
        return true;
    };
    if (c.peek() == 'H') {
        c.accept('H');
        return std_module(n);
    }
    if (c.peek() == 'd') {
        if (!keyword("dual")) c.fail("expected a combinator");
        c.expect('(');
        ModulePtr m = parse_module_expr(c, n);
        c.expect(')');
        return dual(std::move(m));
    }
    if (c.peek() == 't') {
        if (!keyword("tensor")) c.fail("expected a combinator");
        c.expect('(');
        ModulePtr m = parse_module_expr(c, n);
        while (c.peek() == ',') {
            c.accept(',');
            m = tensor(std::move(m), parse_module_expr(c, n));
        }
        c.expect(')');
        return m;
    }
    if (c.peek() == 'w') {
        if (!keyword("wedge")) c.fail("expected a combinator");
        int arity = c.integer();
        c.expect('(');
        ModulePtr m = parse_module_expr(c, n);
        c.expect(')');
        return wedge(std::move(m), arity);
    }
    c.fail("expected H, dual, tensor or wedge{2,3,4}");
}

inline ModulePtr parse_module(const std::string& text, int n) {
    detail::Cursor c(text);
    ModulePtr m = parse_module_expr(c, n);
    if (!c.eof()) c.fail("trailing input");
    return m;
}

inline std::vector<int64_t> parse_label_body(const std::string& text, size_t open) {
    if (text.back() != ']') throw error("label must look like phi[a1,...,an]");
    std::vector<int64_t> out;
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw error("bad label entry: " + item);
        }
    }
    if (out.empty()) throw error("empty label");
    return out;
}

inline void print_element(const Config& cfg, const ModuleElement& e, std::ostream& out) {
    if (cfg.format == "json")
        out << element_to_json(e).dump() << "\n";
    else
        out << e.str() << "\n";
}

inline void print_decomposition(const Config& cfg, const Decomposition& d, std::ostream& out) {
    if (cfg.format == "json") {
        out << decomposition_to_json(d).dump() << "\n";
        return;
    }
    for (const auto& c : d)
        out << c.multiplicity << " x " << phi_str(c.phi) << "  lambda=" << tuple_str(c.lambda)
            << "  dim=" << c.dimension.get_str() << "\n";
}

inline ModulePtr map_domain(const JohnsonCtx& ctx, const std::string& name) {
    if (name == "f1" || name == "f") return ctx.W2U;
    if (name == "f2") return ctx.UU;
    if (name == "alt") return ctx.Lift;
    if (name == "contract3" || name == "wedge12") return ctx.T4;
    return ctx.T6;  // g1 g2 h1 h2 k l m n
}

}  // namespace cli_detail

// In-process entry point (main is a thin wrapper); args exclude the program
// name.
inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    using cli_detail::Config;
    CLI::App app{"exact computations around the Johnson homomorphisms of IA_n"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Config cfg;
    app.add_option("--n", cfg.n, "rank of the free group (default 3)");
    app.add_option("--degree", cfg.degree, "Magnus truncation bound (default 4)");
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string word_arg, word_arg2, expr_arg, label_arg, map_name, claim_id, out_path, in_path;
    bool n_given = false;

    auto* tau_cmd = app.add_subcommand("tau", "Johnson homomorphism of an IA word");
    tau_cmd->add_option("word", word_arg, "automorphism word")->required();
    auto* tau2_cmd = app.add_subcommand("tau2", "higher Johnson homomorphism on ker(tau)");
    tau2_cmd->add_option("word", word_arg, "automorphism word")->required();
    auto* dec_cmd = app.add_subcommand("decompose", "decompose a module expression");
    dec_cmd->add_option("expr", expr_arg, "module expression, e.g. wedge2(tensor(wedge2(H),dual(H)))")
        ->required();
    auto* weyl_cmd = app.add_subcommand("weyl-dim", "Weyl dimension of an irreducible");
    weyl_cmd->add_option("label", label_arg, "phi[a1,...,an] or lambda[l1,...,ln]")->required();
    auto* cyc_cmd = app.add_subcommand("cycle", "abelian cycle image tau(u) ^ tau(v)");
    cyc_cmd->add_option("u", word_arg, "first automorphism word")->required();
    cyc_cmd->add_option("v", word_arg2, "second automorphism word")->required();
    auto* map_cmd = app.add_subcommand("map", "apply a named equivariant map to a JSON vector");
    map_cmd->add_option("name", map_name, "f1 f2 f g1 g2 h1 h2 k l m n alt contract3 wedge12")
        ->required();
    map_cmd->add_option("--in", in_path, "read the vector from a file instead of stdin");
    auto* verify_cmd = app.add_subcommand("verify", "run the verification claims");
    verify_cmd->add_option("--claim", claim_id, "run a single claim by id");
    verify_cmd->add_option("--out", out_path, "also write the JSON report to a file");
    auto* rank_cmd = app.add_subcommand("rank", "rank of K^(2)/K^(3): formula vs span oracle");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    n_given = app.count("--n") > 0;

    try {
        if (*tau_cmd || *tau2_cmd) {
            cli_detail::validate(cfg, false);
            bool higher = static_cast<bool>(*tau2_cmd);
            if (cfg.degree < (higher ? 3 : 2))
                throw error("degree bound too small for this computation");
            JohnsonCtx ctx(cfg.n);
            AutWord w = parse_autword(word_arg, cfg.n);
            cli_detail::print_element(cfg, higher ? tau2(ctx, w) : tau(ctx, w), out);
            return 0;
        }
        if (*dec_cmd) {
            cli_detail::validate(cfg, true);
            ModulePtr m = cli_detail::parse_module(expr_arg, cfg.n);
            cli_detail::print_decomposition(cfg, decompose(m), out);
            return 0;
        }
        if (*weyl_cmd) {
            cli_detail::validate(cfg, false);
            Lambda l;
            if (label_arg.rfind("phi[", 0) == 0)
                l = phi_to_lambda(cli_detail::parse_label_body(label_arg, 3));
            else if (label_arg.rfind("lambda[", 0) == 0)
                l = cli_detail::parse_label_body(label_arg, 6);
            else
                throw error("label must start with phi[ or lambda[");
            if (n_given && l.size() != static_cast<size_t>(cfg.n))
                throw error("label length does not match --n");
            Integer d = weyl_dimension(l);
            if (cfg.format == "json")
                out << Json{{"lambda", l}, {"phi", lambda_to_phi(l)},
                            {"dimension", integer_to_json(d)}}
                           .dump()
                    << "\n";
            else
                out << d.get_str() << "\n";
            return 0;
        }
        if (*cyc_cmd) {
            cli_detail::validate(cfg, false);
            JohnsonCtx ctx(cfg.n);
            ModuleElement c = abelian_cycle_image(ctx, parse_autword(word_arg, cfg.n),
                                                  parse_autword(word_arg2, cfg.n));
            cli_detail::print_element(cfg, c, out);
            return 0;
        }
        if (*map_cmd) {
            cli_detail::validate(cfg, false);
            JohnsonCtx ctx(cfg.n);
            Json j;
            if (!in_path.empty()) {
                std::ifstream f(in_path);
                if (!f) throw error("cannot open " + in_path);
                f >> j;
            } else {
                in >> j;
            }
            ModuleElement v = element_from_json(j, cli_detail::map_domain(ctx, map_name));
            cli_detail::print_element(cfg, named_map(ctx, map_name, v), out);
            return 0;
        }
        if (*rank_cmd) {
            cli_detail::validate(cfg, false);
            if (cfg.n < 3 || cfg.n > 5) throw error("rank comparison is supported for n = 3..5");
            ClaimReport r = verify_corollary_rank(cfg.n);
            if (cfg.format == "json")
                out << claim_to_json(r).dump() << "\n";
            else
                out << (r.passed() ? "PASS" : "FAIL") << " rank("
                    << "K^(2)/K^(3)) formula=" << corollary_rank_formula(cfg.n)
                    << " computed=" << r.computed["rank"].dump() << "\n";
            return r.passed() ? 0 : 1;
        }
        if (*verify_cmd) {
            cli_detail::validate(cfg, false);
            std::vector<ClaimSpec> specs;
            for (auto& s : all_claims()) {
                if (!claim_id.empty() && s.id != claim_id) continue;
                if (claim_id.empty() && n_given && s.n != cfg.n) continue;
                specs.push_back(std::move(s));
            }
            if (specs.empty())
                throw error(claim_id.empty() ? "no claims for the requested n"
                                             : "unknown claim id: " + claim_id);
            Report report = run_claims(specs);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw error("cannot open " + out_path);
                f << report_to_json(report).dump(2) << "\n";
            }
            if (cfg.format == "json") {
                out << report_to_json(report).dump(2) << "\n";
            } else {
                for (const auto& c : report.claims) {
                    out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.id << " ("
                        << c.runtime_ms << " ms)\n";
                    if (!c.passed())
                        for (const auto& s : c.checks)
                            if (s.status == "fail") out << "       failed: " << s.name << "\n";
                }
                out << "pass=" << report.pass << " fail=" << report.fail
                    << " skipped=" << report.skipped << "\n";
            }
            return report.all_passed() ? 0 : 1;
        }
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace jkl
