#include "qhgrass/cli.hpp"

#include <exception>
#include <sstream>

#include "CLI11.hpp"

#include "qhgrass/localization.hpp"
#include "qhgrass/oracle.hpp"
#include "qhgrass/pieri.hpp"
#include "qhgrass/serialize.hpp"

namespace qhgrass {

namespace {

using nlohmann::json;

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size() || value < 0)
                throw DomainError("partition parts must be nonnegative integers: '" + token + "'");
            parts.push_back(value);
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw DomainError("partition parts must be nonnegative integers: '" + token + "'");
        }
    }
    return parts;
}

Rect parse_rect(int m, int n) {
    if (!(1 <= m && m < n)) {
        std::ostringstream os;
        os << "require 1 <= m < n, got m=" << m << " n=" << n;
        throw DomainError(os.str());
    }
    return Rect{m, n};
}

struct FormatOpts {
    std::string format = "text";
    bool expand = false;
};

void add_format_options(CLI::App* cmd, FormatOpts& f) {
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"json", "latex", "text"}))
        ->capture_default_str();
    cmd->add_flag("--expand", f.expand, "expand factored coefficients");
}

void print_expansion(std::ostream& out, const Expansion& e, const json& operation,
                     const FormatOpts& f) {
    if (f.format == "json")
        out << expansion_to_json(e, operation).dump(2) << "\n";
    else if (f.format == "latex")
        out << expansion_to_latex(e, f.expand) << "\n";
    else
        out << expansion_to_text(e, f.expand) << "\n";
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Products in the torus-equivariant quantum cohomology of Grassmannians"};
    app.require_subcommand(1);

    int m = 0, n = 0;

    auto add_rect = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "number of rows")->required();
        cmd->add_option("--n", n, "ambient dimension")->required();
    };

    // pieri
    auto* pieri = app.add_subcommand("pieri", "multiply by a column or row class");
    std::string mu_text, shape = "column";
    int size = 0;
    bool classical = false;
    FormatOpts pieri_fmt;
    add_rect(pieri);
    pieri->add_option("--mu", mu_text, "partition as comma-separated nonzero parts");
    pieri->add_option("--shape", shape, "strip shape")
        ->check(CLI::IsMember({"column", "row"}))
        ->required();
    pieri->add_option("--size", size, "strip size")->required();
    pieri->add_flag("--classical", classical,
                    "column only: classical product in the one-column-wider rectangle");
    add_format_options(pieri, pieri_fmt);

    // localize
    auto* localize = app.add_subcommand("localize", "restrict a class to a fixed point");
    std::string gamma_text, eta_text;
    FormatOpts loc_fmt;
    add_rect(localize);
    localize->add_option("--gamma", gamma_text, "class partition");
    localize->add_option("--eta", eta_text, "fixed-point partition");
    add_format_options(localize, loc_fmt);

    // product
    auto* product = app.add_subcommand("product", "general quantum product via the solver");
    std::string lam_text, pmu_text;
    std::int64_t product_cap = 10000;
    FormatOpts prod_fmt;
    add_rect(product);
    product->add_option("--lambda", lam_text, "left factor partition");
    product->add_option("--mu", pmu_text, "right factor partition");
    product->add_option("--max-fixed-points", product_cap,
                        "fixed-point cap for the wide-rectangle solve")
        ->capture_default_str();
    add_format_options(product, prod_fmt);

    // crosscheck
    auto* crosscheck = app.add_subcommand("crosscheck", "verify all Pieri products three ways");
    std::int64_t cross_cap = 10000;
    std::string cross_format = "text";
    add_rect(crosscheck);
    crosscheck->add_option("--max-fixed-points", cross_cap, "fixed-point cap for solver legs")
        ->capture_default_str();
    crosscheck->add_option("--format", cross_format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("qhgrass");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (pieri->parsed()) {
        const Rect rect = parse_rect(m, n);
        const Partition mu(rect, parse_parts(mu_text));
        if (classical) {
            if (shape != "column")
                throw DomainError("--classical is only available for --shape column");
            auto cls = huangli_column_pieri(size, mu);
            json op{{"kind", "pieri-classical"},
                    {"shape", shape},
                    {"size", size},
                    {"mu", partition_to_json(mu)}};
            if (pieri_fmt.format == "json")
                out << classical_to_json(cls, Rect{rect.m, rect.n + 1}, op).dump(2) << "\n";
            else if (pieri_fmt.format == "latex")
                out << classical_to_latex(cls) << "\n";
            else
                out << classical_to_text(cls) << "\n";
            return 0;
        }
        Expansion e = shape == "column" ? column_pieri(size, mu) : row_pieri(size, mu);
        json op{{"kind", "pieri"}, {"shape", shape}, {"size", size}, {"mu", partition_to_json(mu)}};
        print_expansion(out, e, op, pieri_fmt);
        return 0;
    }

    if (localize->parsed()) {
        const Rect rect = parse_rect(m, n);
        const Partition gamma(rect, parse_parts(gamma_text));
        const Partition eta(rect, parse_parts(eta_text));
        TPoly value = xi(gamma, eta);
        if (loc_fmt.format == "json") {
            json op{{"kind", "localize"},
                    {"gamma", partition_to_json(gamma)},
                    {"eta", partition_to_json(eta)}};
            json j{{"grassmannian", json{{"m", rect.m}, {"n", rect.n}}},
                   {"operation", op},
                   {"value", poly_to_json(value)}};
            out << j.dump(2) << "\n";
        } else if (loc_fmt.format == "latex") {
            out << poly_to_latex(value) << "\n";
        } else {
            out << poly_to_text(value) << "\n";
        }
        return 0;
    }

    if (product->parsed()) {
        const Rect rect = parse_rect(m, n);
        const Partition lam(rect, parse_parts(lam_text));
        const Partition mu(rect, parse_parts(pmu_text));
        Expansion e = eq_quantum_product(lam, mu, product_cap);
        json op{{"kind", "product"},
                {"lambda", partition_to_json(lam)},
                {"mu", partition_to_json(mu)}};
        print_expansion(out, e, op, prod_fmt);
        return 0;
    }

    // crosscheck
    const Rect rect = parse_rect(m, n);
    CrosscheckOptions opts;
    opts.quantum_cap = cross_cap;
    CheckReport rep = crosscheck_pieri(rect, opts);
    if (cross_format == "json") {
        out << report_to_json(rep).dump(2) << "\n";
    } else if (rep.ok()) {
        if (rep.skipped == 0)
            out << "all products agree (3 routes)\n";
        else
            out << "all products agree (2 routes; " << rep.skipped
                << " localization legs skipped beyond cap)\n";
        out << "checked " << rep.checked << " coefficient comparisons\n";
    } else {
        out << report_to_json(rep).dump(2) << "\n";
    }
    return rep.ok() ? 0 : 2;
}

} // namespace

} // namespace qhgrass
