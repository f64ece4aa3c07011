#include "CLI11.hpp"
#include "hypmirror/run.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace hypmirror;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot write output file: " + path.string());
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, mirror equations and chart atlases for hypertoric spaces"};
    std::string task, configPath, outDir, format = "json";
    bool wantSvg = false;

    std::string taskHelp = "task to run: all (config task list)";
    for (const auto& t : known_tasks())
        taskHelp += ", " + t;
    app.add_option("task", task, taskHelp)->required();
    app.add_option("--config", configPath, "job configuration (JSON)")->required();
    app.add_option("--out", outDir, "directory for per-task report files (default: stdout)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--svg", wantSvg, "also emit real.svg and tropical.svg (requires d <= 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        JobConfig job = parse_config(slurp(configPath));
        if (task != "all") {
            const auto& known = known_tasks();
            if (std::find(known.begin(), known.end(), task) == known.end())
                throw input_error("unknown task: " + task);
            job.tasks = {task};
        }
        if (!outDir.empty())
            job.outDir = outDir;

        RunResult res = run(job);

        if (!job.outDir.empty()) {
            fs::create_directories(job.outDir);
            for (const auto& r : res.results) {
                if (format == "json") {
                    write_file(fs::path(job.outDir) / (r.task + ".json"),
                               r.report.dump(2) + "\n");
                } else {
                    std::ostringstream ss;
                    render_text(ss, r.report);
                    write_file(fs::path(job.outDir) / (r.task + ".txt"), ss.str());
                }
                std::cout << r.task << ": " << (r.pass ? "ok" : "FAIL") << "\n";
            }
        } else if (format == "json") {
            std::cout << res.bundle().dump(2) << "\n";
        } else {
            for (const auto& r : res.results) {
                std::cout << "== " << r.task << " ==\n";
                render_text(std::cout, r.report);
            }
        }

        if (wantSvg) {
            HypertoricData h = load_and_normalize(job.input);
            TropicalArrangement arr = build_tropical(h);
            fs::path dir = job.outDir.empty() ? fs::path(".") : fs::path(job.outDir);
            fs::create_directories(dir);
            write_file(dir / "real.svg", emit_svg(h, arr, SvgKind::Real, job.render));
            write_file(dir / "tropical.svg", emit_svg(h, arr, SvgKind::Tropical, job.render));
        }
        return res.exitCode;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
