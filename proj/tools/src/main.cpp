#include <iostream>
#include <thread>

#include "commands.hpp"
#include "mealy/error.hpp"

int main(int argc, char** argv) {
    using namespace mealy::cli;
    CLI::App app{"Mealy automata: actions, Schreier graphs, transitivity, spectra and censuses"};
    app.require_subcommand(1);
    app.set_version_flag("--version", MEALY_VERSION);

    Context ctx;
    ctx.jobs = std::max(1u, std::thread::hardware_concurrency());
    ctx.manifest.version = MEALY_VERSION;
    add_commands(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    ctx.manifest.subcommand = sub->get_name();
    for (const auto* opt : sub->get_options()) {
        if (opt->get_name() == "--help") continue;
        if (opt->count() > 0) ctx.manifest.flags[opt->get_name()] = opt->results();
        else if (!opt->get_default_str().empty()) ctx.manifest.flags[opt->get_name()] = {opt->get_default_str()};
    }

    try {
        return ctx.actions.at(sub)();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mealy::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mealy::SymbolError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mealy::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mealy::NotFoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
