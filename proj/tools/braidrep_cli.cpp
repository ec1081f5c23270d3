#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidrep/json_io.hpp"
#include "braidrep/path_oracle.hpp"

using namespace braidrep;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::size_t n = 3;
    std::string spec_name = "simple";
    std::string params_json;
    std::string word_text;
    std::string format = "text";
    bool use_stdin = false;
};

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

RepSpec build_spec(const CommonOpts& opts) {
    RepKind kind = rep_kind_from_string(opts.spec_name);
    std::map<char, LaurentPolynomial> params;
    if (!opts.params_json.empty()) params = params_from_json(json::parse(opts.params_json));
    return make_spec(kind, std::move(params));
}

BraidWord word_from_opts(const CommonOpts& opts) {
    std::string text = opts.use_stdin ? read_stdin() : opts.word_text;
    return parse_word(text, opts.n);
}

void print_matrix(const PolyMatrix& m, const std::string& format) {
    if (format == "json") {
        std::cout << matrix_to_json(m).dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::cout << "[ ";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) std::cout << ", ";
            std::cout << m.at(i, j).str();
        }
        std::cout << " ]\n";
    }
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_word) {
    cmd->add_option("--n", opts.n, "strand count");
    cmd->add_option("--spec", opts.spec_name, "representation: simple|burau|case1|case2|case3|raw");
    cmd->add_option("--params", opts.params_json, "spec parameters as JSON");
    cmd->add_option("--format", opts.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--stdin", opts.use_stdin, "read the main input from standard input");
    if (with_word) cmd->add_option("--word", opts.word_text, "braid word");
}

json params_for_block(const CommonOpts& opts) {
    std::string text = opts.use_stdin ? read_stdin() : opts.params_json;
    if (text.empty()) throw InvalidParams("--params (or --stdin) is required");
    return json::parse(text);
}

LaurentPolynomial param_or_zero(const json& p, const char* name) {
    if (!p.contains(name)) return LaurentPolynomial::zero();
    return LaurentPolynomial::parse(p.at(name).get<std::string>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid group representations: evaluation, verification, kernel search"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::size_t max_len = 6;
    std::size_t limit = 1;
    std::uint64_t seed = 0;
    std::uint64_t modulus = 2305843009213693951ULL;
    unsigned jobs = 1;

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a word under a representation");
    add_common(cmd_eval, opts, true);
    auto* cmd_oracle = app.add_subcommand("oracle", "evaluate a word by path analysis (simple rep)");
    add_common(cmd_oracle, opts, true);
    auto* cmd_relations = app.add_subcommand("relations", "check the braid relations symbolically");
    add_common(cmd_relations, opts, false);
    auto* cmd_classify = app.add_subcommand("classify", "classify a raw (a,b,c,d) block");
    add_common(cmd_classify, opts, false);
    auto* cmd_residual = app.add_subcommand("residual", "print the cubic residual of a raw block");
    add_common(cmd_residual, opts, false);
    auto* cmd_witness = app.add_subcommand("witness", "certify a kernel witness");
    add_common(cmd_witness, opts, true);
    auto* cmd_search = app.add_subcommand("search", "search for kernel witnesses");
    add_common(cmd_search, opts, false);
    cmd_search->add_option("--max-len", max_len, "maximum word length");
    cmd_search->add_option("--limit", limit, "maximum witnesses to emit");
    cmd_search->add_option("--seed", seed, "fingerprint assignment seed");
    cmd_search->add_option("--modulus", modulus, "fingerprint prime modulus");
    cmd_search->add_option("--jobs", jobs, "worker threads (reserved; search runs sequentially)");
    auto* cmd_diagram = app.add_subcommand("diagram", "print an ASCII braid diagram");
    add_common(cmd_diagram, opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (cmd_eval->parsed()) {
            print_matrix(evaluate(build_spec(opts), word_from_opts(opts)), opts.format);
        } else if (cmd_oracle->parsed()) {
            print_matrix(path_matrix(word_from_opts(opts)), opts.format);
        } else if (cmd_relations->parsed()) {
            RelationReport report = check_relations(build_spec(opts), opts.n);
            if (opts.format == "json") {
                std::cout << report_to_json(report).dump() << "\n";
            } else {
                std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
                for (auto i : report.cubic_failures)
                    std::cout << "cubic relation fails at i=" << i << "\n";
                for (auto [i, j] : report.commuting_failures)
                    std::cout << "commuting relation fails at (" << i << "," << j << ")\n";
            }
            return report.passed ? 0 : 1;
        } else if (cmd_classify->parsed()) {
            json p = params_for_block(opts);
            CaseLabel label = classify_case(param_or_zero(p, "a"), param_or_zero(p, "b"),
                                            param_or_zero(p, "c"), param_or_zero(p, "d"));
            if (opts.format == "json") {
                std::cout << json{{"label", case_kind_name(label.label)},
                                  {"reason", label.reason}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << case_kind_name(label.label) << ": " << label.reason << "\n";
            }
            bool admissible = label.label == CaseKind::Case1 || label.label == CaseKind::Case2 ||
                              label.label == CaseKind::Case3;
            return admissible ? 0 : 1;
        } else if (cmd_residual->parsed()) {
            json p = params_for_block(opts);
            PolyMatrix r = cubic_residual(param_or_zero(p, "a"), param_or_zero(p, "b"),
                                          param_or_zero(p, "c"), param_or_zero(p, "d"));
            print_matrix(r, opts.format);
        } else if (cmd_witness->parsed()) {
            KernelWitness w = verify_kernel_witness(build_spec(opts), word_from_opts(opts));
            if (opts.format == "json")
                std::cout << witness_to_json(w).dump() << "\n";
            else
                std::cout << (w.certified ? "CERTIFIED" : "NOT CERTIFIED") << "\n";
            return w.certified ? 0 : 1;
        } else if (cmd_search->parsed()) {
            SearchConfig config;
            config.n = opts.n;
            config.max_len = max_len;
            config.spec = build_spec(opts);
            config.seed = seed;
            config.modulus = modulus;
            config.limit = limit;
            SearchResult result = search_kernel(config);
            if (opts.format == "json") {
                std::cout << search_result_to_json(result).dump() << "\n";
            } else {
                for (const auto& w : result.witnesses)
                    std::cout << "witness: " << format_word(w.word) << "\n";
                std::cout << "enumerated " << result.words_enumerated << ", fingerprint hits "
                          << result.fingerprint_hits << ", confirmed " << result.confirmed << "\n";
            }
        } else if (cmd_diagram->parsed()) {
            BraidWord w = word_from_opts(opts);
            for (int k : w.letters) {
                std::size_t i = static_cast<std::size_t>(std::abs(k));
                for (std::size_t p = 1; p <= w.n; ++p) {
                    if (p > 1) std::cout << ' ';
                    if (p == i)
                        std::cout << (k > 0 ? '\\' : '/');
                    else if (p == i + 1)
                        std::cout << (k > 0 ? '/' : '\\');
                    else
                        std::cout << '|';
                }
                std::cout << "\n";
            }
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
