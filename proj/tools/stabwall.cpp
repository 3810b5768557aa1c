#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stabwall/commands.hpp"

namespace sw = stabwall;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sw::ConfigError("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw sw::ConfigError("cannot open output file '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-and-chamber arithmetic for Bridgeland stability on K3 and Enriques "
                 "surfaces"};
    app.require_subcommand(1);
    std::string config_path, out_path, format = "records", bound;
    int depth = -1, workers = 0;
    app.add_option("--config", config_path, "job configuration file");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "records|json|svg")
        ->check(CLI::IsMember({"records", "json", "svg"}));
    app.add_option("--depth", depth, "search depth override");
    app.add_option("--bound", bound, "enumeration bound override");
    app.add_option("--workers", workers, "worker threads (default STABWALL_WORKERS or 1)");

    std::string cmd;
    for (const char* name : {"pair", "charge", "wall", "walls", "gieseker", "envelope",
                             "decompose", "transform", "wordsearch", "example-suite", "plot"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->callback([&cmd, name]() { cmd = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (config_path.empty()) throw sw::ConfigError("--config is required");
        sw::JobConfig cfg = sw::parse_config(slurp(config_path));
        if (depth >= 0) cfg.depth = depth;
        if (!bound.empty()) cfg.bound = sw::parse_rat(bound);
        int n_workers = workers;
        if (n_workers <= 0) {
            if (const char* env = std::getenv("STABWALL_WORKERS")) n_workers = std::atoi(env);
            if (n_workers <= 0) n_workers = 1;
        }

        if (cmd == "plot") {
            emit(sw::cmd_plot(cfg, n_workers), out_path);
            return 0;
        }
        sw::Report rep = [&]() {
            if (cmd == "pair") return sw::cmd_pair(cfg);
            if (cmd == "charge") return sw::cmd_charge(cfg);
            if (cmd == "wall") return sw::cmd_wall(cfg);
            if (cmd == "walls") return sw::cmd_walls(cfg, n_workers);
            if (cmd == "gieseker") return sw::cmd_gieseker(cfg);
            if (cmd == "envelope") return sw::cmd_envelope(cfg);
            if (cmd == "decompose") return sw::cmd_decompose(cfg);
            if (cmd == "transform") return sw::cmd_transform(cfg);
            if (cmd == "wordsearch") return sw::cmd_wordsearch(cfg);
            if (cmd == "example-suite") return sw::cmd_example_suite(cfg);
            throw sw::ConfigError("unknown command");
        }();
        emit(format == "json" ? rep.to_json() : rep.to_records(), out_path);
        return 0;
    } catch (const sw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const sw::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const sw::InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
