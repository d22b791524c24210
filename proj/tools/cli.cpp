#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <utility>

#include <CLI11.hpp>

#include "lcanet/canonical.hpp"
#include "lcanet/closure.hpp"
#include "lcanet/dag.hpp"
#include "lcanet/incomparability.hpp"
#include "lcanet/io.hpp"
#include "lcanet/relation.hpp"

namespace lcanet {

namespace {

void print_violations(const RealizabilityVerdict& verdict, const LeafSet& leaves,
                      std::ostream& out) {
    for (const auto& [p, q] : verdict.x1_violations)
        out << "X1 violation: " << to_string(leaves, p) << " < " << to_string(leaves, q) << "\n";
    for (const auto& [p, q] : verdict.x2_violations)
        out << "X2 violation: " << to_string(leaves, p) << " < " << to_string(leaves, q) << "\n";
}

bool write_dot_file(const Dag& G, const std::string& path, std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    if (file)
        file << to_dot(G);
    if (!file) {
        err << path << ": cannot write file\n";
        return false;
    }
    return true;
}

// R and S may come from separate files; they are rebuilt over the union of
// their leaf sets before the joint algorithm runs.
LeafSet union_leaves(const Relation& R, const Relation& S) {
    std::set<std::string> names(R.leaves().names().begin(), R.leaves().names().end());
    names.insert(S.leaves().names().begin(), S.leaves().names().end());
    return LeafSet(std::vector<std::string>(names.begin(), names.end()));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lcanet: realize least common ancestor constraints with networks"};
    app.require_subcommand(1);

    auto* closure_cmd =
        app.add_subcommand("closure", "Print the +-closure of a constraint file");
    std::string closure_file;
    closure_cmd->add_option("file", closure_file, "constraint file")->required();
    bool closure_stats = false;
    closure_cmd->add_flag("--stats", closure_stats,
                          "report rule application counts on stderr");

    auto* check_cmd = app.add_subcommand("check", "Decide realizability");
    std::string check_file;
    check_cmd->add_option("file", check_file, "constraint file")->required();
    bool check_strict = false;
    check_cmd->add_flag("--strict", check_strict,
                        "also decide strict realizability; the exit code reflects it");

    auto* realize_cmd =
        app.add_subcommand("realize", "Build a network realizing a constraint file");
    std::string realize_file;
    realize_cmd->add_option("file", realize_file, "constraint file")->required();
    std::string realize_output = "network";
    realize_cmd
        ->add_option("--output", realize_output,
                     "graph to emit: network (default), dag, or reduced")
        ->check(CLI::IsMember({"network", "dag", "reduced"}));
    std::string realize_dot;
    realize_cmd->add_option("--dot", realize_dot, "also write Graphviz output to this path");

    auto* pair_cmd = app.add_subcommand(
        "realize-pair", "Realize order and incomparability constraints jointly");
    std::string pair_rfile;
    std::string pair_sfile;
    pair_cmd->add_option("constraints", pair_rfile, "order constraint file")->required();
    pair_cmd
        ->add_option("incomparabilities", pair_sfile,
                     "incomparability file with 'A B <> X Y' lines")
        ->required();
    std::string pair_dot;
    pair_cmd->add_option("--dot", pair_dot, "also write Graphviz output to this path");

    auto* extract_cmd =
        app.add_subcommand("extract", "Print the LCA constraints a DAG satisfies");
    std::string extract_file;
    extract_cmd->add_option("dag", extract_file, "DAG file")->required();
    bool extract_strict_flag = false;
    extract_cmd->add_flag("--strict", extract_strict_flag, "extract the strict relation");

    auto* verify_cmd =
        app.add_subcommand("verify", "Check that a DAG realizes a constraint file");
    std::string verify_dag_file;
    std::string verify_rfile;
    verify_cmd->add_option("dag", verify_dag_file, "DAG file")->required();
    verify_cmd->add_option("constraints", verify_rfile, "constraint file")->required();
    bool verify_strict_flag = false;
    verify_cmd->add_flag("--strict", verify_strict_flag, "check strict realization");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (closure_cmd->parsed()) {
            Relation R = parse_constraints_file(closure_file);
            ClosureResult result = plus_closure(R);
            out << serialize_constraints(result.closure);
            if (closure_stats)
                err << "rule applications: r1=" << result.rule_applications.r1
                    << " r2=" << result.rule_applications.r2
                    << " r3=" << result.rule_applications.r3 << "\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            Relation R = parse_constraints_file(check_file);
            RealizabilityVerdict verdict = is_realizable(R);
            out << (verdict.realizable ? "realizable" : "not realizable") << "\n";
            print_violations(verdict, R.leaves(), out);
            if (check_strict) {
                out << (verdict.strict ? "strictly realizable" : "not strictly realizable")
                    << "\n";
                if (verdict.asymmetry_witness)
                    out << "asymmetry witness: "
                        << to_string(R.leaves(), verdict.asymmetry_witness->first) << " <> "
                        << to_string(R.leaves(), verdict.asymmetry_witness->second) << "\n";
            }
            bool pass = check_strict ? verdict.strict : verdict.realizable;
            return pass ? 0 : 1;
        }

        if (realize_cmd->parsed()) {
            Relation R = parse_constraints_file(realize_file);
            AlgorithmResult result = algorithm_real(R);
            if (!result.verdict.realizable) {
                err << "not realizable\n";
                print_violations(result.verdict, R.leaves(), err);
                return 1;
            }
            Dag G = realize_output == "dag"       ? std::move(*result.canonical)
                    : realize_output == "reduced" ? transitive_reduction(*result.canonical)
                                                  : std::move(*result.network);
            out << serialize_dag(G);
            if (!realize_dot.empty() && !write_dot_file(G, realize_dot, err))
                return 2;
            return 0;
        }

        if (pair_cmd->parsed()) {
            Relation R = parse_constraints_file(pair_rfile);
            Relation S = parse_constraints_file(pair_sfile, "<>");
            LeafSet joint = union_leaves(R, S);
            R = rebase(R, joint);
            S = rebase(S, joint);
            PairVerdict verdict = realize_pair(R, S);
            if (!verdict.ok) {
                if (!verdict.base.realizable) {
                    err << "augmented relation not realizable\n";
                    print_violations(verdict.base, joint, err);
                }
                for (const auto& [p, q] : verdict.comparability_violations)
                    err << "incomparability violated: " << to_string(joint, p) << " <> "
                        << to_string(joint, q) << "\n";
                return 1;
            }
            out << serialize_dag(*verdict.network);
            if (!pair_dot.empty() && !write_dot_file(*verdict.network, pair_dot, err))
                return 2;
            return 0;
        }

        if (extract_cmd->parsed()) {
            Dag G = parse_dag_file(extract_file);
            Relation R = extract_strict_flag ? extract_strict(G) : extract_leq(G);
            out << serialize_constraints(R);
            return 0;
        }

        if (verify_cmd->parsed()) {
            Dag G = parse_dag_file(verify_dag_file);
            Relation R = parse_constraints_file(verify_rfile);
            if (!(R.leaves() == G.leaves()))
                R = rebase(R, G.leaves());
            RealizationReport report = verify_strict_flag ? verify_strictly_realizes(G, R)
                                                          : verify_realizes(G, R);
            out << (report.ok ? "ok" : "fail") << "\n";
            for (Pair p : report.undefined_lcas)
                out << "undefined lca: " << to_string(R.leaves(), p) << "\n";
            for (const auto& f : report.i1_failures)
                out << "I1 violated: " << to_string(R.leaves(), f.lhs) << " < "
                    << to_string(R.leaves(), f.rhs) << " (observed: " << to_string(f.observed)
                    << ")\n";
            for (const auto& f : report.i2_failures)
                out << "I2 violated: " << to_string(R.leaves(), f.lhs) << " = "
                    << to_string(R.leaves(), f.rhs) << " (observed: " << to_string(f.observed)
                    << ")\n";
            for (const auto& f : report.i0_failures)
                out << "I0 violated: " << to_string(R.leaves(), f.lhs) << " < "
                    << to_string(R.leaves(), f.rhs) << " (observed: " << to_string(f.observed)
                    << ")\n";
            return report.ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

} // namespace lcanet
