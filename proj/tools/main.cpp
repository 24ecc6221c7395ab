#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rbsys/commands.hpp"
#include "rbsys/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw rbsys::InputError("cannot open model file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rbsys: exact verification and construction for (generalized) "
                 "Rota-Baxter systems, their cohomology and induced structures"};
    app.require_subcommand(1);

    std::string model_path;
    std::string format = "human";
    rbsys::CommandOptions opts;

    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const auto& name : rbsys::command_names()) {
        CLI::App* sub = app.add_subcommand(name, "run the '" + name + "' checks");
        sub->add_option("model", model_path, "model file ('-' for stdin)")->required();
        sub->add_option("--format", format, "human|machine")
            ->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--max-degree", opts.max_degree, "highest cohomology degree");
        sub->add_option("--arity-bound", opts.arity_bound, "highest homotopy arity to check");
        sub->add_option("--order", opts.order, "deformation order (0 = full series)");
        sub->add_option("--seed", opts.seed, "seed recorded in the report");
        sub->add_option("--mode", opts.mode, "aybp|frobenius or left|right|both");
        subs.emplace_back(name, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string chosen;
        for (const auto& [name, sub] : subs)
            if (sub->parsed()) chosen = name;
        rbsys::ModelDocument doc = rbsys::parse_model(read_input(model_path));
        rbsys::Report rep = rbsys::run_command(chosen, doc, opts);
        std::cout << rbsys::emit_report(
            rep, format == "machine" ? rbsys::ReportFormat::Machine : rbsys::ReportFormat::Human);
        return rbsys::exit_code_for(rep);
    } catch (const rbsys::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rbsys::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
