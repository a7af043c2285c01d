#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brauerkit/algebra.hpp"
#include "brauerkit/canonical.hpp"
#include "brauerkit/correspondence.hpp"
#include "brauerkit/derived.hpp"
#include "brauerkit/flip.hpp"
#include "brauerkit/json_io.hpp"
#include "brauerkit/mutation.hpp"
#include "brauerkit/reduction.hpp"
#include "brauerkit/sb_quiver.hpp"

using namespace brauerkit;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

long long reduction_budget() {
    const char* env = std::getenv("BRAUERKIT_BUDGET");
    if (!env) return -1;
    return std::atoll(env);
}

Matrix arrow_counts(const SBQuiver& q) {
    int n = static_cast<int>(q.vertices.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[q.vertices[i]] = i;
    Matrix m(n, std::vector<long long>(n, 0));
    for (const Arrow& a : q.arrows) ++m[index.at(a.tail)][index.at(a.head)];
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brauerkit: SB quivers, Brauer graphs, tilting mutation and flips"};
    app.require_subcommand(1);

    std::string file, file2;
    int vertex = 0, edge = 0, depth = 8;
    bool left = false;

    auto* cmd_validate = app.add_subcommand("validate", "check invariants of a structure");
    cmd_validate->add_option("file", file)->required();

    auto* cmd_to_sb = app.add_subcommand("to-sb", "Brauer quiver of a Brauer graph");
    cmd_to_sb->add_option("file", file)->required();

    auto* cmd_to_bg = app.add_subcommand("to-bg", "Brauer graph of an SB quiver");
    cmd_to_bg->add_option("file", file)->required();

    auto* cmd_mutate = app.add_subcommand("mutate", "mutate an SB quiver at a vertex");
    cmd_mutate->add_option("file", file)->required();
    cmd_mutate->add_option("--vertex", vertex)->required();
    cmd_mutate->add_flag("--left", left);

    auto* cmd_flip = app.add_subcommand("flip", "flip a Brauer graph at an edge");
    cmd_flip->add_option("file", file)->required();
    cmd_flip->add_option("--edge", edge)->required();
    cmd_flip->add_flag("--left", left);

    auto* cmd_cartan = app.add_subcommand("cartan", "Cartan matrix of an SB quiver");
    cmd_cartan->add_option("file", file)->required();

    auto* cmd_basis = app.add_subcommand("basis", "path basis summary of an SB quiver");
    cmd_basis->add_option("file", file)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "double-star normal form with log");
    cmd_reduce->add_option("file", file)->required();

    auto* cmd_fp = app.add_subcommand("fingerprint", "derived-invariant fingerprint");
    cmd_fp->add_option("file", file)->required();

    auto* cmd_compat = app.add_subcommand(
        "check-compat", "flip-then-quiver versus quiver-then-mutate at an edge");
    cmd_compat->add_option("file", file)->required();
    cmd_compat->add_option("--edge", edge)->required();

    auto* cmd_verify = app.add_subcommand(
        "verify", "Cartan and Ext identities for a mutation");
    cmd_verify->add_option("file", file)->required();
    cmd_verify->add_option("--vertex", vertex)->required();

    auto* cmd_search = app.add_subcommand("search", "breadth-first flip search");
    cmd_search->add_option("file", file)->required();
    cmd_search->add_option("file2", file2)->required();
    cmd_search->add_option("--depth", depth);

    auto* cmd_dot = app.add_subcommand("export-dot", "DOT export of a structure");
    cmd_dot->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*cmd_validate) {
            std::string text = slurp(file);
            std::vector<std::string> report;
            if (looks_like_sb_quiver(text))
                report = validate(sb_quiver_from_json(text));
            else
                report = validate(brauer_graph_from_json(text));
            std::string payload = "[";
            for (size_t i = 0; i < report.size(); ++i)
                payload += (i ? ",\n  \"" : "\n  \"") + report[i] + "\"";
            payload += report.empty() ? "]" : "\n]";
            std::cout << payload << "\n";
            for (const std::string& r : report) std::cerr << r << "\n";
            return report.empty() ? 0 : 1;
        }
        if (*cmd_to_sb) {
            BrauerGraph g = brauer_graph_from_json(slurp(file));
            std::cout << to_json(renumbered(brauer_quiver(g))) << "\n";
            return 0;
        }
        if (*cmd_to_bg) {
            SBQuiver q = sb_quiver_from_json(slurp(file));
            std::cout << to_json(renumbered(brauer_graph_of(q))) << "\n";
            return 0;
        }
        if (*cmd_mutate) {
            SBQuiver q = sb_quiver_from_json(slurp(file));
            SBQuiver m = left ? mutate_left(q, vertex) : mutate_right(q, vertex);
            std::cout << to_json(renumbered(m)) << "\n";
            return 0;
        }
        if (*cmd_flip) {
            BrauerGraph g = brauer_graph_from_json(slurp(file));
            BrauerGraph f = left ? flip_left(g, edge) : flip_right(g, edge);
            std::cout << to_json(renumbered(f)) << "\n";
            return 0;
        }
        if (*cmd_cartan) {
            SBQuiver q = sb_quiver_from_json(slurp(file));
            std::cout << to_json(cartan_matrix(q)) << "\n";
            return 0;
        }
        if (*cmd_basis) {
            SBQuiver q = sb_quiver_from_json(slurp(file));
            PathBasis b = path_basis(q);
            std::ostringstream os;
            os << "{\n  \"dimensions\": {";
            for (size_t i = 0; i < q.vertices.size(); ++i) {
                os << (i ? ", " : "") << "\"" << q.vertices[i]
                   << "\": " << b.dim(q.vertices[i]);
            }
            os << "},\n  \"total\": " << b.total_dim() << "\n}";
            std::cout << os.str() << "\n";
            return 0;
        }
        if (*cmd_reduce) {
            std::string text = slurp(file);
            bool as_quiver = looks_like_sb_quiver(text);
            SBQuiver q = as_quiver ? sb_quiver_from_json(text)
                                   : brauer_quiver(brauer_graph_from_json(text));
            ReductionOutcome r = to_double_star(q, reduction_budget());
            std::cout << "{\n\"normal_form\": ";
            if (as_quiver)
                std::cout << to_json(renumbered(r.quiver));
            else
                std::cout << to_json(renumbered(brauer_graph_of(r.quiver)));
            std::cout << ",\n\"log\": " << to_json(r.log) << "\n}\n";
            return 0;
        }
        if (*cmd_fp) {
            std::string text = slurp(file);
            Fingerprint f = looks_like_sb_quiver(text)
                                ? fingerprint(sb_quiver_from_json(text))
                                : fingerprint(brauer_graph_from_json(text));
            std::cout << to_json(f) << "\n";
            return 0;
        }
        if (*cmd_compat) {
            BrauerGraph g = brauer_graph_from_json(slurp(file));
            SBQuiver via_flip = brauer_quiver(flip_right(g, edge));
            SBQuiver via_mutation = mutate_right(brauer_quiver(g), edge);
            bool ok = isomorphic(via_flip, via_mutation);
            std::cout << "{\"edge\": " << edge << ", \"compatible\": "
                      << (ok ? "true" : "false") << "}\n";
            if (!ok) std::cerr << "flip and mutation disagree at edge " << edge << "\n";
            return ok ? 0 : 1;
        }
        if (*cmd_verify) {
            SBQuiver q = sb_quiver_from_json(slurp(file));
            SBQuiver m = mutate_right(q, vertex);
            bool cartan_ok = euler_cartan(q, vertex) == cartan_matrix(m);
            bool ext_ok = ext_table(q, vertex) == arrow_counts(m);
            if (cartan_ok && ext_ok) {
                std::cout << "OK: Cartan and Ext identities hold\n";
                return 0;
            }
            std::cout << "FAIL:" << (cartan_ok ? "" : " Cartan identity broken")
                      << (ext_ok ? "" : " Ext identity broken") << "\n";
            return 1;
        }
        if (*cmd_search) {
            BrauerGraph g1 = brauer_graph_from_json(slurp(file));
            BrauerGraph g2 = brauer_graph_from_json(slurp(file2));
            FlipSearchResult r = flip_search(g1, g2, depth);
            if (r.found) {
                std::cout << "{\"found\": true, \"steps\": " << to_json(r.steps, 0)
                          << "}\n";
            } else if (r.fingerprint_mismatch) {
                std::cout << "{\"found\": false, \"reason\": "
                             "\"not connected under tested invariants\"}\n";
            } else {
                std::cout << "{\"found\": false, \"reason\": \"search exhausted\"}\n";
            }
            return 0;
        }
        if (*cmd_dot) {
            std::string text = slurp(file);
            if (looks_like_sb_quiver(text))
                std::cout << to_dot(sb_quiver_from_json(text));
            else
                std::cout << to_dot(brauer_graph_from_json(text));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
