// gwpt: batch front end for scenario files.
//
// exit codes: 0 everything passed, 1 an assertion failed or was vacuous,
// 2 the scenario could not be read or is invalid.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gwpt/error.hpp"
#include "gwpt/fixtures.hpp"
#include "gwpt/local_models.hpp"
#include "gwpt/run.hpp"
#include "gwpt/scenario.hpp"

namespace {

constexpr int kInvalid = 2;

struct OrderFlags {
    std::optional<int> q_order;
    std::optional<int> u_order;
    std::optional<int> degree_bound;

    void attach(CLI::App* app)
    {
        app->add_option("--q-order", q_order, "PT series are compared below q^N")->check(CLI::NonNegativeNumber);
        // GW series start at u^-2, so an empty window needs N <= -2
        app->add_option("--u-order", u_order, "GW series are compared below u^N");
        app->add_option("--degree-bound", degree_bound, "curve classes up to this degree")
            ->check(CLI::NonNegativeNumber);
    }

    gwpt::RunOptions options() const { return {q_order, u_order, degree_bound, {}}; }
};

gwpt::Scenario load_valid(const std::string& path)
{
    auto s = gwpt::load_scenario(path);
    const auto diags = gwpt::validate_scenario(s);
    if (!diags.empty()) {
        std::ostringstream os;
        for (const auto& d : diags) {
            os << path << ":" << d.location << ": " << d.message << "\n";
        }
        throw gwpt::ScenarioError(os.str());
    }
    return s;
}

void write_out(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw gwpt::IoError("cannot write '" + path + "'");
    }
}

int report(const gwpt::RunReport& r, const std::string& path)
{
    // report to the file (or stdout), the one-line-per-check summary to stderr
    write_out(path, gwpt::render_report(r));
    std::cerr << gwpt::summary(r);
    return gwpt::exit_code(r);
}

gwpt::EffectiveClass parse_class(const std::string& text)
{
    gwpt::IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            throw gwpt::ScenarioError("bad class '" + text + "': expected comma separated integers");
        }
    }
    return gwpt::EffectiveClass(v);
}

// Runs a single ad-hoc check built from the command line.
int adhoc(const std::string& file, const std::string& kind, const std::vector<std::string>& classes,
          const std::string& insertions, const OrderFlags& flags, const std::string& out)
{
    auto s = load_valid(file);
    gwpt::CheckSpec c;
    c.kind = kind;
    c.name = kind + "/cli";
    c.insertions = insertions;
    for (const auto& cl : classes) {
        c.classes.push_back(parse_class(cl));
    }
    s.checks = {c};
    const auto diags = gwpt::validate_scenario(s);
    if (!diags.empty()) {
        throw gwpt::ScenarioError(diags.front().location + ": " + diags.front().message);
    }
    return report(gwpt::run_all(s, flags.options()), out);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact GW/PT series engine"};
    app.require_subcommand(1);
    std::string out;
    int code = 0;

    std::string file;
    auto* validate = app.add_subcommand("validate", "check a scenario and echo its canonical form");
    validate->add_option("file", file)->required();
    validate->add_option("--report", out, "write the canonical form here");
    validate->callback([&] {
        const auto s = load_valid(file);
        write_out(out, gwpt::dump_scenario(s));
        std::cerr << "valid: " << s.name << " (" << gwpt::hex64(gwpt::fnv1a64(gwpt::dump_scenario(s))) << ")\n";
    });

    OrderFlags run_flags;
    std::vector<std::string> only;
    auto* run = app.add_subcommand("run-scenario", "run every declared check");
    run->add_option("file", file)->required();
    run->add_option("--check", only, "run only the named checks");
    run->add_option("--report", out, "write the report here instead of stdout");
    run_flags.attach(run);
    run->callback([&] {
        auto opts = run_flags.options();
        opts.only = only;
        code = report(gwpt::run_all(load_valid(file), opts), out);
    });

    OrderFlags key_flags;
    std::vector<std::string> key_classes;
    std::string key_ins;
    auto* key = app.add_subcommand("check-key-equality", "compare both sides of the key equality");
    key->add_option("file", file)->required();
    key->add_option("--class", key_classes, "Y-class, e.g. 2,1 (repeatable; default: all up to the bound)");
    key->add_option("--insertions", key_ins, "named insertion set");
    key->add_option("--report", out);
    key_flags.attach(key);
    key->callback([&] { code = adhoc(file, "key-equality", key_classes, key_ins, key_flags, out); });

    OrderFlags main_flags;
    std::vector<std::string> main_classes;
    std::string main_ins;
    auto* mt = app.add_subcommand("main-theorem", "X-side correspondence assembled from the transition");
    mt->add_option("file", file)->required();
    mt->add_option("--class", main_classes, "X-class (repeatable; default: all up to the bound)");
    mt->add_option("--insertions", main_ins, "named insertion set");
    mt->add_option("--report", out);
    main_flags.attach(mt);
    mt->callback([&] { code = adhoc(file, "main-theorem", main_classes, main_ins, main_flags, out); });

    auto* vk = app.add_subcommand("validate-ktilde", "structural checks of the K-tilde table");
    vk->add_option("file", file)->required();
    vk->add_option("--report", out);
    vk->callback([&] {
        auto s = load_valid(file);
        if (!s.ktilde) {
            throw gwpt::ScenarioError(file + ": no ktilde section");
        }
        gwpt::CheckSpec c;
        c.name = c.kind = "ktilde-valid";
        s.checks = {c};
        code = report(gwpt::run_all(s), out);
    });

    int degree = 1;
    int order = 12;
    auto* local = app.add_subcommand("verify-local", "local curve correspondence in class d[C]");
    local->add_option("--degree", degree)->check(CLI::PositiveNumber);
    local->add_option("--order", order, "compare below u^N");
    local->add_option("--report", out);
    local->callback([&] {
        gwpt::Scenario s;
        s.name = "local-curve";
        s.orders = {0, order, 0};
        gwpt::CheckSpec c;
        c.name = "local-correspondence/" + std::to_string(degree);
        c.kind = "local-correspondence";
        c.degree = degree;
        s.checks = {c};
        code = report(gwpt::run_all(s), out);
    });

    std::string which;
    std::uint32_t seed = 1;
    int max_size = 5;
    gwpt::Orders fixture_orders{64, 10, 4};
    auto* fix = app.add_subcommand("make-fixture", "write a built-in scenario");
    fix->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"conifold-toy", "synthetic-degeneration", "synthetic-ktilde"}));
    fix->add_option("--report", out, "output path (default stdout)");
    fix->add_option("--seed", seed);
    fix->add_option("--max-size", max_size, "largest |alpha| for synthetic-ktilde");
    fix->add_option("--q-order", fixture_orders.q_order);
    fix->add_option("--u-order", fixture_orders.u_order);
    fix->add_option("--degree-bound", fixture_orders.degree_bound);
    fix->callback([&] {
        gwpt::Scenario s;
        if (which == "conifold-toy") {
            s = gwpt::conifold_toy_scenario(fixture_orders);
        } else if (which == "synthetic-degeneration") {
            s = gwpt::synthetic_degeneration_scenario(fixture_orders, seed);
        } else {
            s = gwpt::synthetic_ktilde_scenario(max_size, seed);
        }
        write_out(out, gwpt::dump_scenario(s));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInvalid;
    } catch (const gwpt::Error& e) {
        std::cerr << "error: " << e.what() << (std::string(e.what()).ends_with("\n") ? "" : "\n");
        return kInvalid;
    }
    return code;
}
