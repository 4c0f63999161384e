#include "kappa/emit.hpp"
#include "kappa/klengine.hpp"
#include "kappa/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace kappa;

Roots parse_roots(const std::vector<std::string>& items, int m) {
    Roots out;
    for (const auto& item : items) {
        if (item.empty()) continue;
        if (item == "0") {
            out.push_back(GradedPoly(m));
            continue;
        }
        out.push_back(parse_poly(item, m));
    }
    return out;
}

void emit_value(const GradedPoly& p, const std::string& format) {
    if (format == "text")
        std::cout << p.text() << "\n";
    else if (format == "latex")
        std::cout << latex(p) << "\n";
    else
        std::cout << to_json(p).dump() << "\n";
}

void emit_value(const ClassPoly& p, const std::string& format) {
    if (format == "text")
        std::cout << p.text() << "\n";
    else if (format == "latex")
        std::cout << latex(p) << "\n";
    else
        std::cout << to_json(p).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degeneracy-locus classes in even infinitesimal cohomology"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::string format = "text";

    auto* fgl_cmd = app.add_subcommand("print-fgl", "Print the formal group law of Q_{2m}");
    int fgl_m = 1;
    std::string fgl_format = "text";
    fgl_cmd->add_option("--m", fgl_m, "half-degree parameter")->required();
    fgl_cmd->add_option("--out", fgl_format, "text|latex|json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    auto* segre_cmd = app.add_subcommand("segre", "Relative Segre class S_k(E-F) on split roots");
    int segre_m = 1, segre_k = 0;
    std::vector<std::string> e_roots_s, f_roots_s;
    std::string segre_format = "text";
    segre_cmd->add_option("--m", segre_m)->required();
    segre_cmd->add_option("--k", segre_k)->required();
    segre_cmd->add_option("--e-roots", e_roots_s, "comma separated roots, e.g. x1,x2 or -x1")
        ->delimiter(',');
    segre_cmd->add_option("--f-roots", f_roots_s)->delimiter(',');
    segre_cmd->add_option("--out", segre_format)
        ->check(CLI::IsMember({"text", "latex", "json"}));

    auto* kl_cmd = app.add_subcommand("kl", "Degeneracy-locus class kappa_lambda");
    std::string kl_type = "A", kl_path = "both", kl_format = "text";
    std::vector<int> lambda;
    int kl_m = 1, kl_n = 0, kl_d = 0;
    bool kl_specialize = false;
    kl_cmd->add_option("--type", kl_type)->check(CLI::IsMember({"A", "C"}));
    kl_cmd->add_option("--m", kl_m)->required();
    kl_cmd->add_option("--n", kl_n, "rank of E (type A) / half rank (type C)")->required();
    kl_cmd->add_option("--d", kl_d, "subbundle rank (type A only)");
    kl_cmd->add_option("--lambda", lambda, "partition, e.g. 2,1")->required()->delimiter(',');
    kl_cmd->add_option("--path", kl_path)->check(CLI::IsMember({"closed", "iterated", "both"}));
    kl_cmd->add_flag("--specialize", kl_specialize, "substitute split Chern roots");
    kl_cmd->add_option("--out", kl_format)->check(CLI::IsMember({"text", "latex", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    VerifyOptions vopts;
    bool list_suites = false;
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--max-m", vopts.max_m, "cap the m sweep (0 = suite default)");
    verify_cmd->add_option("--seed", vopts.seed, "seed for randomized cases");
    verify_cmd->add_option("--workers", vopts.workers,
                           "worker threads (0 = KAPPA_WORKERS env or hardware)");
    verify_cmd->add_flag("--list", list_suites, "list suite names and exit");

    try {
        app.parse(argc, argv);

        if (fgl_cmd->parsed()) {
            FormalGroupLaw fgl = build_fgl(fgl_m);
            if (fgl_format == "text")
                std::cout << fgl_text_factored(fgl) << "\n";
            else if (fgl_format == "latex")
                std::cout << fgl_latex_factored(fgl) << "\n";
            else
                std::cout << to_json(fgl.sum).dump() << "\n";
            return 0;
        }

        if (segre_cmd->parsed()) {
            SegreContext ctx(segre_m);
            Roots e = parse_roots(e_roots_s, segre_m);
            Roots f = parse_roots(f_roots_s, segre_m);
            emit_value(segre_virtual(segre_k, e, f, ctx), segre_format);
            return 0;
        }

        if (kl_cmd->parsed()) {
            if (lambda.empty()) throw InvalidInput("empty partition");
            if (kl_type == "A") {
                if (kl_d <= 0) throw InvalidInput("type A requires --d");
                GrassmannSetup setup(kl_n, kl_d, kl_m, lambda);
                ClassPoly closed(kl_m), value(kl_m);
                if (kl_path != "iterated") closed = kl_A_closed(setup);
                if (kl_path == "closed") value = closed;
                if (kl_path == "iterated") value = kl_A_iterated(setup);
                if (kl_path == "both") {
                    ClassPoly iterated = kl_A_iterated(setup);
                    if (!(closed == iterated)) {
                        std::cerr << "two-path disagreement: closed != iterated\n";
                        return 1;
                    }
                    value = closed;
                }
                if (kl_specialize)
                    emit_value(specialize_split(value, setup), kl_format);
                else
                    emit_value(value, kl_format);
            } else {
                LagrangianSetup setup(kl_n, kl_m, lambda);
                ClassPoly closed(kl_m), value(kl_m);
                if (kl_path != "iterated") closed = kl_C_closed(setup);
                if (kl_path == "closed") value = closed;
                if (kl_path == "iterated") value = kl_C_iterated(setup);
                if (kl_path == "both") {
                    ClassPoly iterated = kl_C_iterated(setup);
                    if (!(closed == iterated)) {
                        std::cerr << "two-path disagreement: closed != iterated\n";
                        return 1;
                    }
                    value = closed;
                }
                if (kl_specialize)
                    emit_value(specialize_split(value, setup), kl_format);
                else
                    emit_value(value, kl_format);
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (list_suites) {
                for (const auto& s : suite_names()) std::cout << s << "\n";
                return 0;
            }
            vopts.stream = &std::cout;
            SuiteReport report = run_suite(suite, vopts);
            int failed = report.failures();
            std::cout << "suite " << report.suite << ": " << report.results.size() << " cases, "
                      << failed << " failures, " << static_cast<long>(report.total_ms) << " ms\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
