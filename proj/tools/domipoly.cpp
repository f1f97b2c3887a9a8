// domipoly: exact domination polynomials of k-tree related graph families.
//
// Subcommands: gen, poly, gamma, check, roots, sweep. Family specs are
// kind:k:n tokens (kpath:3:7) or kind:n for the classical families; any
// other argument is read as a graph file in the edge-list text format.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "domipoly/families.hpp"
#include "domipoly/graph_io.hpp"
#include "domipoly/oracle.hpp"
#include "domipoly/recurrence.hpp"
#include "domipoly/roots.hpp"

namespace {

using namespace domipoly;

struct Input {
    std::optional<FamilySpec> spec;  // set for family specs
    Graph graph;                     // always set
};

bool looks_like_family(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    static const char* kinds[] = {"complete", "path",   "cycle",  "star",   "kpath",
                                  "k_path",   "kcycle", "k_cycle", "kwheel", "k_wheel",
                                  "kstar",    "k_star", "ktree",  "k_tree"};
    const std::string head = text.substr(0, colon);
    for (const char* kind : kinds)
        if (head == kind) return true;
    return false;
}

Input load_input(const std::string& text) {
    Input input;
    if (looks_like_family(text)) {
        if (text.rfind("ktree:", 0) == 0 || text.rfind("k_tree:", 0) == 0) {
            const auto first = text.find(':');
            const auto second = text.find(':', first + 1);
            if (second == std::string::npos)
                throw ParseError("spec: expected ktree:<k>:<script-path>");
            int k = 0;
            try {
                k = std::stoi(text.substr(first + 1, second - first - 1));
            } catch (const std::exception&) {
                throw ParseError("spec: bad k in '" + text + "'");
            }
            input.spec = read_k_tree_script(text.substr(second + 1), k);
        } else {
            input.spec = FamilySpec::parse(text);
        }
        input.graph = generate(*input.spec);
    } else {
        input.graph = read_graph_file(text);
    }
    return input;
}

int effective_max_n(std::optional<int> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DOMIPOLY_MAX_N")) return std::atoi(env);
    return kOracleSoftBound;
}

bool method_enumerates(MethodTag tag) {
    switch (tag) {
        case MethodTag::complete_closed:
        case MethodTag::path_rec:
        case MethodTag::cycle_rec:
        case MethodTag::star_closed:
        case MethodTag::kstar_closed: return false;
        default: return true;
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

std::string rootset_to_json(const RootSet& rs, double tol, double eps) {
    std::ostringstream os;
    os << "{\"degree\":" << rs.degree << ",\"tol\":" << format_float(tol)
       << ",\"eps\":" << format_float(eps) << ",\"roots\":[";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (i) os << ",";
        os << "{\"re\":" << format_float(rs.roots[i].real())
           << ",\"im\":" << format_float(rs.roots[i].imag())
           << ",\"residual\":" << format_float(rs.residuals[i]) << "}";
    }
    os << "]}";
    return os.str();
}

std::string rootset_to_csv(const RootSet& rs) {
    std::string out = "re,im,residual\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        out += format_float(rs.roots[i].real());
        out += ',';
        out += format_float(rs.roots[i].imag());
        out += ',';
        out += format_float(rs.residuals[i]);
        out += '\n';
    }
    return out;
}

std::string rootset_to_text(const RootSet& rs, double eps) {
    const RealClassification cls = classify_real(rs, eps);
    std::ostringstream os;
    os << "degree " << rs.degree << ", " << rs.roots.size() << " roots, "
       << cls.real_nonzero_count << " nonzero real\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        os << format_float(rs.roots[i].real()) << " + " << format_float(rs.roots[i].imag())
           << "i  (residual " << format_float(rs.residuals[i]) << ")\n";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact domination polynomials of k-tree related graph families"};
    app.require_subcommand(1);

    std::string spec_arg, output, format, method = "oracle";
    double tol = kDefaultRootTol, eps = kDefaultRealEps;
    std::optional<int> max_n_flag, vertex;
    bool strict = false;
    int kmax = 3, nmax = 12;
    std::vector<std::string> grid_kv;
    int sweep_k = 4, sweep_nmin = 5, sweep_nmax = 44;

    auto* gen = app.add_subcommand("gen", "generate a family graph and write its edge list");
    gen->add_option("spec", spec_arg, "family spec (e.g. kpath:3:7)")->required();
    gen->add_option("-o,--output", output, "output path (default stdout)");

    auto* poly = app.add_subcommand("poly", "compute a domination polynomial");
    poly->add_option("spec", spec_arg, "family spec or graph file")->required();
    poly->add_option("-m,--method", method, "computation path (default oracle)");
    poly->add_option("-o,--output", output, "output path (default stdout)");
    poly->add_option("-f,--format", format, "json|text (default json)");
    poly->add_option("--vertex", vertex, "expansion vertex for general_recurrence");
    poly->add_option("--max-n", max_n_flag, "oracle size bound (default 24 or $DOMIPOLY_MAX_N)");

    auto* gamma = app.add_subcommand("gamma", "compute the domination number");
    gamma->add_option("spec", spec_arg, "family spec or graph file")->required();
    gamma->add_option("-m,--method", method, "oracle|formula|both (default oracle)");
    gamma->add_option("-o,--output", output, "output path (default stdout)");
    gamma->add_option("--max-n", max_n_flag, "oracle size bound (default 24 or $DOMIPOLY_MAX_N)");

    auto* check = app.add_subcommand("check", "cross-check every formula against the oracle");
    check->add_option("--kmax", kmax, "largest k (default 3)");
    check->add_option("--nmax", nmax, "largest n (default 12)");
    check->add_option("--grid", grid_kv, "kmax=K nmax=N form")->expected(1, 2);
    check->add_flag("--strict", strict, "exit nonzero when mismatches exist");
    check->add_option("-o,--output", output, "output path (default stdout)");

    auto* roots_cmd = app.add_subcommand("roots", "locate the domination roots");
    roots_cmd->add_option("spec", spec_arg, "family spec or graph file")->required();
    roots_cmd->add_option("-m,--method", method, "polynomial path (default oracle)");
    roots_cmd->add_option("-o,--output", output, "output path (default stdout)");
    roots_cmd->add_option("-f,--format", format, "json|csv|text (default json)");
    roots_cmd->add_option("--tol", tol, "residual tolerance (default 1e-10)");
    roots_cmd->add_option("--eps", eps, "realness threshold (default 1e-8)");
    roots_cmd->add_option("--vertex", vertex, "expansion vertex for general_recurrence");
    roots_cmd->add_option("--max-n", max_n_flag, "oracle size bound (default 24 or $DOMIPOLY_MAX_N)");

    auto* sweep = app.add_subcommand("sweep", "k-star root scatter over a range of orders");
    sweep->add_option("-k,--k", sweep_k, "clique size k (default 4)");
    sweep->add_option("--nmin", sweep_nmin, "smallest order (default 5)");
    sweep->add_option("--nmax", sweep_nmax, "largest order (default 44)");
    sweep->add_option("--tol", tol, "residual tolerance (default 1e-10)");
    sweep->add_option("-o,--output", output, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    const auto compute = [&](const Input& input, MethodTag tag) {
        if (method_enumerates(tag)) {
            const int bound = effective_max_n(max_n_flag);
            if (input.graph.order() > bound)
                throw CapacityError("order " + std::to_string(input.graph.order()) +
                                    " exceeds the oracle bound " + std::to_string(bound) +
                                    " (raise with --max-n or DOMIPOLY_MAX_N)");
        }
        return input.spec ? compute_for_spec(*input.spec, tag)
                          : compute_for_graph(input.graph, tag, vertex);
    };

    if (gen->parsed()) {
        write_output(output, graph_to_text(load_input(spec_arg).graph));
        return 0;
    }

    if (poly->parsed()) {
        const Input input = load_input(spec_arg);
        const Polynomial p = compute(input, parse_method_tag(method));
        if (format.empty() || format == "json")
            write_output(output, p.to_json() + "\n");
        else if (format == "text")
            write_output(output, p.to_string() + "\n");
        else
            throw ParseError("poly: unsupported format '" + format + "'");
        return 0;
    }

    if (gamma->parsed()) {
        const Input input = load_input(spec_arg);
        const auto oracle_gamma = [&]() {
            if (input.graph.order() == 0)
                throw SpecDomainError("domination number of the empty graph is undefined");
            return compute(input, MethodTag::oracle).min_degree();
        };
        std::ostringstream os;
        if (method == "formula") {
            if (!input.spec) throw SpecDomainError("gamma formula needs a family spec");
            os << gamma_formula(*input.spec) << "\n";
        } else if (method == "oracle") {
            os << oracle_gamma() << "\n";
        } else if (method == "both") {
            if (!input.spec) throw SpecDomainError("gamma formula needs a family spec");
            os << "formula=" << gamma_formula(*input.spec) << " oracle=" << oracle_gamma() << "\n";
        } else {
            throw ParseError("gamma: method must be oracle, formula or both");
        }
        write_output(output, os.str());
        return 0;
    }

    if (check->parsed()) {
        for (const std::string& kv : grid_kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError("check: --grid expects kmax=K nmax=N");
            const std::string key = kv.substr(0, eq);
            int value = 0;
            try {
                value = std::stoi(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw ParseError("check: bad value in '" + kv + "'");
            }
            if (key == "kmax") kmax = value;
            else if (key == "nmax") nmax = value;
            else throw ParseError("check: unknown grid key '" + key + "'");
        }
        const auto reports = build_check_grid(kmax, nmax);
        std::string body;
        std::size_t mismatches = 0;
        for (const CheckReport& r : reports) {
            body += r.to_json();
            body += '\n';
            if (!r.match) ++mismatches;
        }
        body += grid_summary(reports, kmax, nmax);
        body += '\n';
        write_output(output, body);
        return strict && mismatches > 0 ? 1 : 0;
    }

    if (roots_cmd->parsed()) {
        const Input input = load_input(spec_arg);
        const Polynomial p = compute(input, parse_method_tag(method));
        const RootSet rs = find_roots(p, tol);
        if (format.empty() || format == "json")
            write_output(output, rootset_to_json(rs, tol, eps) + "\n");
        else if (format == "csv")
            write_output(output, rootset_to_csv(rs));
        else if (format == "text")
            write_output(output, rootset_to_text(rs, eps));
        else
            throw ParseError("roots: unsupported format '" + format + "'");
        return 0;
    }

    if (sweep->parsed()) {
        write_output(output, sweep_to_csv(star_root_sweep(sweep_k, sweep_nmin, sweep_nmax, tol)));
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domipoly::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << " (" << e.partial.roots.size()
                  << " partial estimates)\n";
        return 1;
    } catch (const domipoly::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
