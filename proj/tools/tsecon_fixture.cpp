// Writes seeded synthetic datasets as CSV for trying out the CLI.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tsecon/error.hpp"
#include "tsecon/simulate.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate seeded synthetic time-series fixtures", "tsecon_fixture"};
    std::string kind = "system";
    std::string out;
    std::size_t n = 200;
    std::size_t k = 4;
    std::uint64_t seed = 1;
    std::string freq = "monthly";
    app.add_option("kind", kind, "system | pair | ardl21 | var1 | hetero | break | arerrors")->capture_default_str();
    app.add_option("--n", n, "observations")->capture_default_str();
    app.add_option("--k", k, "regressors (system only)")->capture_default_str();
    app.add_option("--seed", seed, "generator seed")->capture_default_str();
    app.add_option("--freq", freq, "monthly | daily")->capture_default_str();
    app.add_option("--out", out, "output CSV (default standard output)");
    CLI11_PARSE(app, argc, argv);

    try {
        tsecon::Rng rng(seed);
        namespace sim = tsecon::sim;
        const auto frequency = tsecon::parse_frequency(freq);
        tsecon::Dataset d = kind == "system"     ? sim::cointegrated_system(rng, n, k, frequency)
                            : kind == "pair"     ? sim::cointegrated_pair(rng, n)
                            : kind == "ardl21"   ? sim::ardl21(rng, n)
                            : kind == "var1"     ? sim::unidirectional_var1(rng, n)
                            : kind == "hetero"   ? sim::heteroskedastic(rng, n)
                            : kind == "break"    ? sim::coefficient_break(rng, n)
                            : kind == "arerrors" ? sim::ar_errors(rng, n, 0.7)
                                                 : throw tsecon::UsageError("unknown fixture '" + kind + "'");
        if (d.frequency() != frequency) {
            tsecon::Dataset relabeled(frequency, sim::make_index(d.observations(), frequency));
            for (const auto& name : d.names()) {
                const auto v = d.at(name).values();
                relabeled.add(tsecon::TimeSeries(name, frequency, relabeled.index(), {v.begin(), v.end()}));
            }
            d = std::move(relabeled);
        }
        if (out.empty()) {
            std::cout << tsecon::format_csv(d);
        } else {
            tsecon::write_csv(d, out);
        }
    } catch (const tsecon::Error& e) {
        std::cerr << "tsecon_fixture: error: " << e.what() << '\n';
        return e.category() == tsecon::ErrorCategory::Usage ? 1 : 2;
    }
    return 0;
}
