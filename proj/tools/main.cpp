// levi: command-line front end for the functional-equation workbench.
//
// Exit codes: 0 ok, 1 validation failure (including budget refusals),
// 2 completeness discrepancy, 3 usage or internal error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "levi/json_io.hpp"

namespace {

using namespace levi;

enum class Status : int { Ok = 0, ValidationFailure = 1, Discrepancy = 2, Fatal = 3 };

struct CommandResult {
    Status status = Status::Ok;
    std::optional<Json> payload;             // machine output
    std::string text;                        // human output (stdout)
    std::vector<std::string> diagnostics;    // stderr lines (timings etc.)
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Field parse_field_flag(const std::string& s) {
    if (s == "rational") return Field::rationals();
    if (s.rfind("gf:", 0) == 0) return Field::gf(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
    throw UsageError("--field expects gf:P or rational, got " + s);
}

struct GlobalFlags {
    bool json = false;
    std::string out;
    std::uint64_t budget = 0;  // 0 = module defaults
    int workers = 0;
};

int emit(const CommandResult& result, const GlobalFlags& flags) {
    for (const std::string& line : result.diagnostics) std::cerr << line << "\n";
    if (!flags.out.empty() && result.payload) {
        std::ofstream out(flags.out);
        if (!out) {
            std::cerr << "cannot write " << flags.out << "\n";
            return static_cast<int>(Status::Fatal);
        }
        out << result.payload->dump(2) << "\n";
    }
    if (flags.json && result.payload)
        std::cout << result.payload->dump(2) << "\n";
    else if (!result.text.empty())
        std::cout << result.text;
    else if (result.payload && flags.out.empty())
        std::cout << result.payload->dump(2) << "\n";
    return static_cast<int>(result.status);
}

// ---------------------------------------------------------------- commands

CommandResult cmd_monoid_validate(const std::string& path) {
    const Json j = read_json_file(path);
    try {
        monoid_from_json(j);
    } catch (const Error& e) {
        CommandResult r;
        r.status = Status::ValidationFailure;
        r.text = std::string(e.what()) + "\n";
        r.payload = Json{{"valid", false}, {"violation", e.what()}};
        return r;
    }
    CommandResult r;
    r.text = "valid\n";
    r.payload = Json{{"valid", true}};
    return r;
}

CommandResult cmd_monoid_build(const std::string& expr) {
    const MonoidPtr m = Monoid::from_catalog(expr);
    CommandResult r;
    r.payload = monoid_to_json(*m);
    return r;
}

CommandResult cmd_muls_enumerate(const std::string& path, const std::string& field_str,
                                 bool want_json) {
    const MonoidPtr m = monoid_from_json(read_json_file(path));
    const Field f = parse_field_flag(field_str);
    const auto muls = enumerate_multiplicative(m, f);
    CommandResult r;
    Json arr = Json::array();
    for (const MulFunc& mu : muls) arr.push_back(func_to_json(mu.func()));
    r.payload = std::move(arr);
    if (!want_json) {
        std::string text = std::to_string(muls.size()) + " nonzero multiplicative functions\n";
        for (std::size_t i = 0; i < muls.size(); ++i)
            text += "mu[" + std::to_string(i + 1) + "] = " + values_to_json(muls[i].func()).dump() +
                    "\n";
        r.text = std::move(text);
    }
    return r;
}

CommandResult cmd_spec_check(const std::string& path) {
    const Json j = read_json_file(path);
    try {
        const ProblemSpec spec = spec_from_json(j);
        CommandResult r;
        r.text = "spec ok: |M|=" + std::to_string(spec.monoid()->size()) +
                 ", n=" + std::to_string(spec.block_count()) +
                 ", m=" + std::to_string(spec.term_count()) + ", field " + spec.field().str() +
                 "\n";
        r.payload = Json{{"ok", true},
                         {"size", spec.monoid()->size()},
                         {"n", spec.block_count()},
                         {"m", spec.term_count()},
                         {"field", field_to_json(spec.field())},
                         {"digest", spec_digest(spec)}};
        return r;
    } catch (const Error& e) {
        CommandResult r;
        r.status = Status::ValidationFailure;
        r.text = std::string("spec invalid: ") + e.what() + "\n";
        r.payload = Json{{"ok", false}, {"error", e.what()}};
        return r;
    }
}

CommandResult cmd_verify(const std::string& spec_path, const std::string& tuple_path) {
    const ProblemSpec spec = spec_from_json(read_json_file(spec_path));
    const SolutionTuple t = tuple_from_json(spec, read_json_file(tuple_path));
    const auto violations = residual(spec, t);
    CommandResult r;
    Json vj = Json::array();
    for (const Violation& v : violations)
        vj.push_back(Json{{"x", v.x}, {"y", v.y}, {"defect", scalar_to_json(v.defect)}});
    r.payload = Json{{"violations", std::move(vj)}, {"count", violations.size()}};
    r.text = "residual: " + std::to_string(violations.size()) + " violations\n";
    for (std::size_t i = 0; i < violations.size() && i < 10; ++i)
        r.text += "  at (" + std::to_string(violations[i].x) + ", " +
                  std::to_string(violations[i].y) + ") defect " + violations[i].defect.str() +
                  "\n";
    if (!violations.empty()) r.status = Status::ValidationFailure;
    return r;
}

CommandResult cmd_generate(const std::string& spec_path, const std::string& cls_path) {
    const ProblemSpec spec = spec_from_json(read_json_file(spec_path));
    const Classification cls = classification_from_json(spec, read_json_file(cls_path));
    const SolutionTuple t = regenerate(spec, cls);
    CommandResult r;
    r.payload = tuple_to_json(t);
    return r;
}

CommandResult cmd_classify(const std::string& spec_path, const std::string& tuple_path) {
    const ProblemSpec spec = spec_from_json(read_json_file(spec_path));
    const SolutionTuple t = tuple_from_json(spec, read_json_file(tuple_path));
    const Classification cls = classify(spec, t);
    CommandResult r;
    r.payload = classification_to_json(cls);
    return r;
}

CommandResult cmd_sweep(const std::string& spec_path, const GlobalFlags& flags) {
    const ProblemSpec spec = spec_from_json(read_json_file(spec_path));
    SweepOptions opts;
    if (flags.budget) opts.budget = std::min(opts.budget, flags.budget);
    const SweepResult sw = sweep_families(spec, opts);
    CommandResult r;
    Json tuples = Json::array();
    for (const SolutionTuple& t : sw.tuples) tuples.push_back(tuple_to_json(t));
    Json per_family = Json::object();
    for (const auto& [name, count] : sw.per_family) per_family[name] = count;
    r.payload = Json{{"count", sw.tuples.size()},
                     {"per_family", std::move(per_family)},
                     {"tuples", std::move(tuples)}};
    std::string text = std::to_string(sw.tuples.size()) + " distinct solutions\n";
    for (const auto& [name, count] : sw.per_family)
        text += "  " + name + ": " + std::to_string(count) + "\n";
    r.text = std::move(text);
    return r;
}

CommandResult cmd_oracle_compare(const std::string& spec_path, const GlobalFlags& flags,
                                 const std::vector<std::string>& skip_families) {
    const ProblemSpec spec = spec_from_json(read_json_file(spec_path));
    OracleOptions opts;
    opts.workers = flags.workers;
    if (flags.budget) opts.pair_budget = std::min(opts.pair_budget, flags.budget);
    SweepOptions sweep_opts;
    if (flags.budget) sweep_opts.budget = std::min(sweep_opts.budget, flags.budget);
    for (const std::string& name : skip_families) {
        switch (family_from_name(name)) {
            case FamilyTag::Independent: sweep_opts.independent = false; break;
            case FamilyTag::DependentPair: sweep_opts.dependent_pair = false; break;
            case FamilyTag::DependentSingle: sweep_opts.dependent_single = false; break;
            case FamilyTag::DegenerateNonzeroH: sweep_opts.degenerate = false; break;
            case FamilyTag::Trivial: sweep_opts.trivial = false; break;
        }
    }
    const OracleReport report = compare(spec, opts, sweep_opts);
    CommandResult r;
    r.payload = report_to_json(report);
    r.text = report_to_text(report);
    r.diagnostics.push_back("wall time: " + std::to_string(report.wall_ms) + " ms");
    if (!report.clean()) r.status = Status::Discrepancy;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for a Levi-Civita functional equation on finite monoids"};
    app.require_subcommand(1);

    GlobalFlags flags;
    std::function<CommandResult()> action;

    // shared flags, attached per leaf command
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", flags.json, "emit JSON on stdout");
        cmd->add_option("--out", flags.out, "write the JSON payload to a file");
        cmd->add_option("--budget", flags.budget, "lower the iteration budget");
        cmd->add_option("--workers", flags.workers,
                        "worker threads (default: LEVI_WORKERS or hardware)");
    };

    // monoid validate / build
    auto* monoid = app.add_subcommand("monoid", "Cayley-table operations");
    monoid->require_subcommand(1);
    {
        auto* validate = monoid->add_subcommand("validate", "check the monoid laws on a table");
        auto path = std::make_shared<std::string>();
        validate->add_option("file", *path, "monoid JSON file")->required();
        add_common(validate);
        validate->callback([&, path] { action = [&, path] { return cmd_monoid_validate(*path); }; });

        auto* build = monoid->add_subcommand("build", "build a catalog monoid");
        auto expr = std::make_shared<std::string>();
        auto karg = std::make_shared<int>(-1);
        auto narg = std::make_shared<int>(-1);
        build->add_option("name", *expr,
                          "catalog name: cyclic(n), symmetric3, meet_semilattice(k), "
                          "direct_product(A,B)")
            ->required();
        build->add_option("--k", *karg, "argument for meet_semilattice");
        build->add_option("--n", *narg, "argument for cyclic");
        add_common(build);
        build->callback([&, expr, karg, narg] {
            action = [&, expr, karg, narg] {
                std::string e = *expr;
                if (e.find('(') == std::string::npos) {
                    if (*karg >= 0) e += "(" + std::to_string(*karg) + ")";
                    else if (*narg >= 0) e += "(" + std::to_string(*narg) + ")";
                }
                return cmd_monoid_build(e);
            };
        });
    }

    // muls enumerate
    auto* muls = app.add_subcommand("muls", "multiplicative-function operations");
    muls->require_subcommand(1);
    {
        auto* enumerate = muls->add_subcommand("enumerate",
                                               "all nonzero multiplicative functions M -> K");
        auto path = std::make_shared<std::string>();
        auto field = std::make_shared<std::string>();
        enumerate->add_option("monoid", *path, "monoid JSON file")->required();
        enumerate->add_option("--field", *field, "gf:P or rational")->required();
        add_common(enumerate);
        enumerate->callback([&, path, field] {
            action = [&, path, field] { return cmd_muls_enumerate(*path, *field, flags.json); };
        });
    }

    // spec check
    auto* spec_cmd = app.add_subcommand("spec", "problem-spec operations");
    spec_cmd->require_subcommand(1);
    {
        auto* check = spec_cmd->add_subcommand("check", "validate a problem spec file");
        auto path = std::make_shared<std::string>();
        check->add_option("file", *path, "spec JSON file")->required();
        add_common(check);
        check->callback([&, path] { action = [&, path] { return cmd_spec_check(*path); }; });
    }

    // verify
    {
        auto* verify = app.add_subcommand("verify", "check a tuple against the equation");
        auto spec_path = std::make_shared<std::string>();
        auto tuple_path = std::make_shared<std::string>();
        verify->add_option("spec", *spec_path, "spec JSON file")->required();
        verify->add_option("tuple", *tuple_path, "tuple JSON file")->required();
        add_common(verify);
        verify->callback([&, spec_path, tuple_path] {
            action = [&, spec_path, tuple_path] { return cmd_verify(*spec_path, *tuple_path); };
        });
    }

    // generate
    {
        auto* generate = app.add_subcommand("generate", "build a tuple from family parameters");
        auto spec_path = std::make_shared<std::string>();
        auto cls_path = std::make_shared<std::string>();
        generate->add_option("spec", *spec_path, "spec JSON file")->required();
        generate->add_option("classification", *cls_path, "classification JSON file")->required();
        add_common(generate);
        generate->callback([&, spec_path, cls_path] {
            action = [&, spec_path, cls_path] { return cmd_generate(*spec_path, *cls_path); };
        });
    }

    // classify
    {
        auto* classify_cmd = app.add_subcommand("classify", "recover family and parameters");
        auto spec_path = std::make_shared<std::string>();
        auto tuple_path = std::make_shared<std::string>();
        classify_cmd->add_option("spec", *spec_path, "spec JSON file")->required();
        classify_cmd->add_option("tuple", *tuple_path, "tuple JSON file")->required();
        add_common(classify_cmd);
        classify_cmd->callback([&, spec_path, tuple_path] {
            action = [&, spec_path, tuple_path] { return cmd_classify(*spec_path, *tuple_path); };
        });
    }

    // sweep
    {
        auto* sweep = app.add_subcommand("sweep", "materialize all family solutions");
        auto spec_path = std::make_shared<std::string>();
        sweep->add_option("spec", *spec_path, "spec JSON file")->required();
        add_common(sweep);
        sweep->callback([&, spec_path] {
            action = [&, spec_path] { return cmd_sweep(*spec_path, flags); };
        });
    }

    // oracle compare
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive completeness experiments");
    oracle_cmd->require_subcommand(1);
    {
        auto* cmp = oracle_cmd->add_subcommand("compare",
                                               "brute-force solutions vs generated families");
        auto spec_path = std::make_shared<std::string>();
        auto skip = std::make_shared<std::vector<std::string>>();
        cmp->add_option("spec", *spec_path, "spec JSON file")->required();
        cmp->add_option("--skip-family", *skip,
                        "drop a family from the sweep (negative control for tests)");
        add_common(cmp);
        cmp->callback([&, spec_path, skip] {
            action = [&, spec_path, skip] { return cmd_oracle_compare(*spec_path, flags, *skip); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(Status::Fatal);
    }

    try {
        return emit(action(), flags);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return static_cast<int>(Status::Fatal);
    } catch (const InternalError& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(Status::Fatal);
    } catch (const InternalCaseExhaustion& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(Status::Fatal);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(Status::ValidationFailure);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(Status::Fatal);
    }
}
