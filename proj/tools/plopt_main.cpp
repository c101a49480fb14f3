#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plopt/bench.hpp"

namespace {

std::vector<std::uint64_t> load_seeds(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read seed file " + path);
    std::vector<std::uint64_t> seeds;
    std::uint64_t value = 0;
    while (in >> value)
        seeds.push_back(value);
    if (seeds.empty())
        throw std::runtime_error("seed file " + path + " contains no seeds");
    return seeds;
}

// Campaign config: JSON object or flat key=value lines with the
// ExperimentConfig fields (runs, budget, seed, out, format, jobs).
struct CampaignConfig {
    int runs = 20;
    std::uint64_t budget = 2'000'000;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    unsigned jobs = 1;
};

CampaignConfig load_campaign(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read campaign file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    CampaignConfig config;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const auto doc = nlohmann::json::parse(text);
        config.runs = doc.value("runs", config.runs);
        config.budget = doc.value("budget", config.budget);
        config.seed = doc.value("seed", config.seed);
        config.out = doc.value("out", config.out);
        config.format = doc.value("format", config.format);
        config.jobs = doc.value("jobs", config.jobs);
        return config;
    }

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos || line.empty() || line[0] == '#')
            continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "runs")
            config.runs = std::stoi(value);
        else if (key == "budget")
            config.budget = std::stoull(value);
        else if (key == "seed")
            config.seed = std::stoull(value);
        else if (key == "out")
            config.out = value;
        else if (key == "format")
            config.format = value;
        else if (key == "jobs")
            config.jobs = static_cast<unsigned>(std::stoul(value));
        else
            throw std::runtime_error("unknown campaign key: " + key);
    }
    return config;
}

void print_records(const std::vector<plopt::RunRecord>& records)
{
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& record = records[i];
        std::cout << "run " << i << " seed=" << record.seed
                  << (record.success ? " success" : " failure");
        if (record.evaluations_to_target)
            std::cout << " evals=" << *record.evaluations_to_target;
        if (!record.attributed_method.empty())
            std::cout << " method=" << record.attributed_method;
        std::cout << " best=" << record.best_objective << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"parameter-less optimization benchmark harness"};
    app.require_subcommand(1);

    plopt::ExperimentConfig config;
    std::string seed_file;
    std::string out_path;
    std::string format = "csv";

    auto* run = app.add_subcommand("run", "run one algorithm on one problem");
    run->add_option("--problem", config.problem, "problem name")->required();
    run->add_option("--algorithm", config.algorithm, "algorithm name")->required();
    run->add_option("--runs", config.runs, "number of independent runs");
    run->add_option("--budget", config.budget, "evaluation budget per run");
    run->add_option("--seed", config.base_seed, "base seed");
    run->add_option("--seeds", seed_file, "file with one seed per line");
    run->add_option("--jobs", config.jobs, "concurrent runs");
    run->add_option("--out", out_path, "write the summary row here");
    run->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_flag("--trace", config.trace, "per-unit trace on stderr");

    std::string campaign_file;
    auto* table = app.add_subcommand("table", "full 5x5 benchmark grid");
    table->add_option("--campaign", campaign_file, "campaign config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (!seed_file.empty())
                config.explicit_seeds = load_seeds(seed_file);
            const auto records = plopt::run_experiment(config);
            print_records(records);
            const auto row = plopt::summarize(records, config.problem, config.algorithm);
            if (out_path.empty())
                std::cout << plopt::render_report({row}, format);
            else
                plopt::emit_report({row}, format, out_path);
        } else {
            const auto campaign = load_campaign(campaign_file);
            std::vector<plopt::SummaryRow> rows;
            for (const auto& problem : plopt::ProblemSpec::names()) {
                for (const auto& algorithm : plopt::algorithm_names()) {
                    plopt::ExperimentConfig experiment;
                    experiment.problem = problem;
                    experiment.algorithm = algorithm;
                    experiment.runs = campaign.runs;
                    experiment.budget = campaign.budget;
                    experiment.base_seed = campaign.seed;
                    experiment.jobs = campaign.jobs;
                    const auto records = plopt::run_experiment(experiment);
                    rows.push_back(plopt::summarize(records, problem, algorithm));
                    std::cout << problem << " / " << algorithm << ": R_ts "
                              << rows.back().r_ts << "\n";
                }
            }
            if (campaign.out.empty())
                std::cout << plopt::render_report(rows, campaign.format);
            else
                plopt::emit_report(rows, campaign.format, campaign.out);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
