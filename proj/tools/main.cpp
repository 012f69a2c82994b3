// Command-line front end for the minpay library.
//
// Verbs: simulate, delay-plot, admissible, dimension, stats, ca, pascal,
// compare, oracle-check. Exit codes: 0 success, 1 usage error, 2 domain
// error. All randomness flows from --seed; outputs are byte-identical for
// identical arguments.

#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <minpay/minpay.hpp>

namespace {

using namespace minpay;

struct CurrencyChoice {
    std::string name;
    std::string file;

    CurrencySpec resolve() const {
        if (!file.empty()) return load_currency_file(file);
        return builtin(name);
    }
};

// Adds --currency/--currency-file to a subcommand; exactly one must be given.
CurrencyChoice* add_currency_options(CLI::App* cmd) {
    auto choice = std::make_shared<CurrencyChoice>();
    auto* group = cmd->add_option_group("currency source");
    group->add_option("--currency", choice->name,
                      "Built-in currency name (JPY, KRW, USD, SEK, MODEL6, BINARY(n), GEOMETRIC(r,n))");
    group->add_option("--currency-file", choice->file,
                      "Path to a JSON currency description {\"name\", \"coins\", \"banknote\"}");
    group->require_option(1);
    // Keep the shared_ptr alive for the duration of parsing.
    cmd->parse_complete_callback([choice] {});
    return choice.get();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write output file: " + path);
}

std::string format_double(double v, int precision = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

PriceModel make_price_model(const std::string& prices, bool peak_given, Money peak) {
    if (prices == "triangular") {
        if (!peak_given) throw CLI::RequiredError("--peak (with --prices triangular)");
        return PriceModel::triangular(peak);
    }
    if (peak_given) throw CLI::ValidationError("--peak requires --prices triangular");
    return PriceModel::uniform();
}

std::string grid_to_format(const BinaryGrid& grid, const std::string& format) {
    if (format == "pbm") return to_pbm(grid);
    if (format == "svg") return to_svg(grid);
    throw CLI::ValidationError("--format " + format + " is not available for grids");
}

std::string plot_to_format(const DelayPlot& plot, const std::string& format) {
    if (format == "csv") return points_to_csv(plot);
    return grid_to_format(raster_from_points(plot), format);
}

struct SimulateArgs {
    CurrencyChoice* currency = nullptr;
    long long steps = 100000;
    std::uint64_t seed = 0;
    std::string prices = "uniform";
    Money peak = 0;
    bool peak_given = false;
    std::string out;
    int runs = 1;
};

void run_simulate(const SimulateArgs& a) {
    if (a.runs > 1 && !a.out.empty())
        throw CLI::ValidationError("--out needs a single run; drop --runs or set it to 1");
    const CurrencySpec spec = a.currency->resolve();
    const PriceModel model = make_price_model(a.prices, a.peak_given, a.peak);

    std::cout << "currency: " << spec.name << "\n"
              << "steps: " << a.steps << "\n"
              << "runs: " << a.runs << "\n"
              << "seed: " << a.seed << "\n";

    if (a.runs == 1) {
        const SimulationRun run_result = run(spec, model, a.steps, a.seed);
        const CoinStats stats = coin_count_stats(run_result);
        if (!a.out.empty()) {
            std::ofstream out(a.out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + a.out);
            run_to_csv(out, run_result);
            if (!out) throw std::runtime_error("cannot write output file: " + a.out);
        }
        std::cout << "mean purse size: " << format_double(stats.mean.to_double()) << "\n"
                  << "max purse size: " << stats.max << "\n";
        return;
    }

    // Independent child seeds, spawned in order from the parent stream and
    // merged in the same order, so the report does not depend on scheduling.
    SplitMix64 parent{a.seed};
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(a.runs));
    for (auto& s : seeds) s = parent.next();
    std::vector<std::future<SimulationRun>> futures;
    futures.reserve(seeds.size());
    for (std::uint64_t s : seeds)
        futures.push_back(std::async(std::launch::async,
                                     [&spec, &model, &a, s] { return run(spec, model, a.steps, s); }));

    std::vector<long long> histogram;
    long long total_steps = 0;
    long long total_coins = 0;
    int max_size = 0;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        const SimulationRun r = futures[i].get();
        const CoinStats stats = coin_count_stats(r);
        std::cout << "run " << (i + 1) << ": seed " << seeds[i] << ", mean purse size "
                  << format_double(stats.mean.to_double()) << ", max purse size " << stats.max
                  << "\n";
        if (histogram.size() < stats.histogram.size()) histogram.resize(stats.histogram.size(), 0);
        for (std::size_t k = 0; k < stats.histogram.size(); ++k) histogram[k] += stats.histogram[k];
        for (std::size_t k = 0; k < stats.histogram.size(); ++k)
            total_coins += static_cast<long long>(k) * stats.histogram[k];
        total_steps += static_cast<long long>(r.purse_sizes.size());
        max_size = std::max(max_size, stats.max);
    }
    std::cout << "merged mean purse size: "
              << format_double(static_cast<double>(total_coins) / static_cast<double>(total_steps))
              << "\n"
              << "merged max purse size: " << max_size << "\n";
}

struct SeriesArgs {
    CurrencyChoice* currency = nullptr;
    long long steps = 100000;
    std::uint64_t seed = 0;
    std::string prices = "uniform";
    Money peak = 0;
    bool peak_given = false;
    std::string format = "csv";
    std::string out;
};

void run_delay_plot(const SeriesArgs& a) {
    const CurrencySpec spec = a.currency->resolve();
    const PriceModel model = make_price_model(a.prices, a.peak_given, a.peak);
    const SimulationRun run_result = run(spec, model, a.steps, a.seed);
    write_output(a.out, plot_to_format(delay_plot(run_result), a.format));
}

struct AdmissibleArgs {
    CurrencyChoice* currency = nullptr;
    std::string format = "csv";
    std::string out;
};

void run_admissible(const AdmissibleArgs& a) {
    write_output(a.out, plot_to_format(admissible_set(a.currency->resolve()), a.format));
}

struct DimensionArgs {
    CurrencyChoice* currency = nullptr;
    Money base = 0;
    bool base_given = false;
    int levels = 0;
    bool levels_given = false;
};

void run_dimension(const DimensionArgs& a) {
    const CurrencySpec spec = a.currency->resolve();
    const CurrencyClass cls = classify(spec);
    Money base = a.base;
    if (!a.base_given) {
        if (!cls.geometric_ratio)
            throw CLI::RequiredError("--base (the currency has no single level ratio)");
        base = *cls.geometric_ratio;
    }
    const DelayPlot plot = admissible_set(spec);
    int levels = a.levels;
    if (!a.levels_given) {
        levels = 0;
        for (Money s = base; s <= plot.extent / base * base && s <= plot.extent; s *= base) {
            ++levels;
            if (s > plot.extent / base) break;  // next multiply would overflow the extent
        }
    }
    const BoxCounts boxes = box_count_dimension(plot, base, levels);

    std::cout << "currency: " << spec.name << "\n"
              << "points: " << plot.points.size() << "\n"
              << "extent: " << plot.extent << "\n"
              << "base: " << base << "\n";
    Money side = 1;
    for (std::size_t k = 0; k < boxes.counts.size(); ++k) {
        std::cout << "level " << k << ": box side " << side << ", count " << boxes.counts[k]
                  << "\n";
        side *= base;
    }
    std::cout << "measured dimension: " << format_double(boxes.slope) << "\n";
    if (cls.geometric_ratio)
        std::cout << "predicted dimension: " << format_double(predicted_dimension(*cls.geometric_ratio))
                  << "\n";
}

struct StatsArgs {
    CurrencyChoice* currency = nullptr;
    long long steps = 0;
    bool steps_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string prices = "uniform";
    Money peak = 0;
    bool peak_given = false;
    std::string out;
};

void run_stats(const StatsArgs& a) {
    const CurrencySpec spec = a.currency->resolve();
    if (a.steps_given) {
        if (!a.seed_given) throw CLI::RequiredError("--seed (with --steps)");
        const PriceModel model = make_price_model(a.prices, a.peak_given, a.peak);
        const SimulationRun run_result = run(spec, model, a.steps, a.seed);
        write_output(a.out, stats_to_json(coin_count_stats(run_result)));
        return;
    }
    // Exact table statistics over all amounts a banknote can break into.
    const ReprTable table{spec};
    const Rational mean = table_mean_coins(table);
    std::cout << "currency: " << spec.name << "\n"
              << "amounts: " << table.entries() << " (0.." << (table.banknote() - table.gcd())
              << " step " << table.gcd() << ")\n"
              << "mean min-coins: " << mean.num << "/" << mean.den << " = " << mean.to_double()
              << "\n"
              << "max min-coins: " << table.max_min_count() << "\n";
    if (!a.out.empty()) {
        std::string csv = "amount,min_count\n";
        for (std::size_t i = 0; i < table.entries(); ++i) {
            csv += std::to_string(table.amount_at(i));
            csv += ',';
            csv += std::to_string(table.min_count(table.amount_at(i)));
            csv += '\n';
        }
        write_output(a.out, csv);
    }
}

struct CaArgs {
    unsigned rule = 60;
    int rows = 64;
    std::string format = "pbm";
    std::string out;
};

void run_ca(const CaArgs& a) {
    write_output(a.out, grid_to_format(eca(a.rule, a.rows), a.format));
}

struct PascalArgs {
    Money mod = 2;
    int rows = 64;
    std::string format = "pbm";
    std::string out;
};

void run_pascal(const PascalArgs& a) {
    write_output(a.out, grid_to_format(pascal_mod(a.mod, a.rows), a.format));
}

struct CompareArgs {
    bool use_rule60 = false;
    Money pascal = 0;
    bool pascal_given = false;
    Money mapped = 0;
    bool mapped_given = false;
    int rows = 64;
};

BinaryGrid mapped_geometric_grid(Money ratio, int rows) {
    // Smallest power of the ratio that covers the requested triangle rows.
    int levels = 1;
    Money extent = ratio;
    while (extent < rows) {
        extent *= ratio;
        ++levels;
    }
    return crop(map_delayplot_to_triangle(admissible_set(geometric_currency(ratio, levels))), rows,
                rows);
}

void run_compare(const CompareArgs& a) {
    std::vector<BinaryGrid> grids;
    if (a.use_rule60) grids.push_back(rule60(a.rows));
    if (a.pascal_given) grids.push_back(pascal_mod(a.pascal, a.rows));
    if (a.mapped_given) grids.push_back(mapped_geometric_grid(a.mapped, a.rows));
    if (grids.size() != 2)
        throw CLI::ValidationError(
            "choose exactly two of --rule60, --pascal, --mapped-geometric");
    const GridDiff diff = compare_grids(grids[0], grids[1]);
    if (diff.equal)
        std::cout << "equal\n";
    else
        std::cout << "differ: " << diff.diff_count << " cells\n";
}

struct OracleArgs {
    CurrencyChoice* currency = nullptr;
    long long cases = 1000;
    std::uint64_t seed = 12345;
};

int run_oracle_check(const OracleArgs& a) {
    const ReprTable table{a.currency->resolve()};
    const CurrencySpec& spec = table.currency();
    const Money g = table.gcd();
    long long exhaustive = 0;
    long long mismatches = 0;

    auto check_case = [&](Money residue, Money price) {
        const Purse purse = table.min_vector(residue);
        const Transaction fast = minimal_payment(purse, price, table);
        const Transaction slow = full_search_payment(purse, price, table);
        if (fast.after.size() != slow.after.size() || !fast.verify(spec) || !slow.verify(spec)) {
            ++mismatches;
            if (mismatches <= 5)
                std::cerr << "mismatch: purse value " << residue << ", price " << price
                          << ": efficient keeps " << fast.after.size() << " coins, full search "
                          << slow.after.size() << "\n";
        }
    };

    if (table.entries() <= 64) {
        for (std::size_t i = 0; i < table.entries(); ++i)
            for (Money price = g; price <= spec.banknote; price += g) {
                check_case(table.amount_at(i), price);
                ++exhaustive;
            }
    }
    SplitMix64 rng{a.seed};
    const std::uint64_t residues = static_cast<std::uint64_t>(table.entries());
    const std::uint64_t price_slots = static_cast<std::uint64_t>(3 * spec.banknote / g);
    for (long long i = 0; i < a.cases; ++i) {
        const Money residue = static_cast<Money>(rng.next_below(residues)) * g;
        const Money price = (1 + static_cast<Money>(rng.next_below(price_slots))) * g;
        check_case(residue, price);
    }

    std::cout << "currency: " << spec.name << "\n"
              << "exhaustive cases: " << exhaustive << "\n"
              << "random cases: " << a.cases << "\n"
              << "mismatches: " << mismatches << "\n";
    if (mismatches != 0) {
        std::cout << "oracle check failed\n";
        return 2;
    }
    std::cout << "oracle check passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Purse simulator for the least-coins payment strategy, with lattice "
                 "point sets, fractal dimension estimates, and triangle automata."};
    app.require_subcommand(1);
    int exit_code = 0;

    // simulate
    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run the purse simulation and report coin statistics");
    sim.currency = add_currency_options(sim_cmd);
    sim_cmd->add_option("--steps", sim.steps, "Number of purchases")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", sim.seed, "RNG seed")->required();
    sim_cmd->add_option("--prices", sim.prices, "Price model")
        ->check(CLI::IsMember({"uniform", "triangular"}));
    auto* sim_peak = sim_cmd->add_option("--peak", sim.peak, "Mode of the triangular price model");
    sim_cmd->add_option("--out", sim.out, "Write the per-step series as CSV");
    sim_cmd->add_option("--runs", sim.runs, "Independent runs with derived seeds")
        ->check(CLI::PositiveNumber);
    sim_cmd->callback([&] {
        sim.peak_given = sim_peak->count() > 0;
        run_simulate(sim);
    });

    // delay-plot
    SeriesArgs dp;
    auto* dp_cmd = app.add_subcommand("delay-plot", "Plot successive change values (z(t), z(t+1))");
    dp.currency = add_currency_options(dp_cmd);
    dp_cmd->add_option("--steps", dp.steps, "Number of purchases")->check(CLI::PositiveNumber);
    dp_cmd->add_option("--seed", dp.seed, "RNG seed")->required();
    dp_cmd->add_option("--prices", dp.prices, "Price model")
        ->check(CLI::IsMember({"uniform", "triangular"}));
    auto* dp_peak = dp_cmd->add_option("--peak", dp.peak, "Mode of the triangular price model");
    dp_cmd->add_option("--format", dp.format, "Output format")
        ->check(CLI::IsMember({"csv", "pbm", "svg"}));
    dp_cmd->add_option("--out", dp.out, "Output file (stdout when omitted)");
    dp_cmd->callback([&] {
        dp.peak_given = dp_peak->count() > 0;
        run_delay_plot(dp);
    });

    // admissible
    AdmissibleArgs adm;
    auto* adm_cmd =
        app.add_subcommand("admissible", "Predicted delay-plot point set of a multiplicable currency");
    adm.currency = add_currency_options(adm_cmd);
    adm_cmd->add_option("--format", adm.format, "Output format")
        ->check(CLI::IsMember({"csv", "pbm", "svg"}));
    adm_cmd->add_option("--out", adm.out, "Output file (stdout when omitted)");
    adm_cmd->callback([&] { run_admissible(adm); });

    // dimension
    DimensionArgs dim;
    auto* dim_cmd =
        app.add_subcommand("dimension", "Box-counting dimension of the predicted point set");
    dim.currency = add_currency_options(dim_cmd);
    auto* dim_base = dim_cmd->add_option("--base", dim.base, "Box scaling base")->check(CLI::PositiveNumber);
    auto* dim_levels =
        dim_cmd->add_option("--levels", dim.levels, "Number of base-fold refinements of the box side")
            ->check(CLI::PositiveNumber);
    dim_cmd->callback([&] {
        dim.base_given = dim_base->count() > 0;
        dim.levels_given = dim_levels->count() > 0;
        run_dimension(dim);
    });

    // stats
    StatsArgs st;
    auto* st_cmd = app.add_subcommand(
        "stats", "Coin-count statistics: exact table values, or empirical with --steps");
    st.currency = add_currency_options(st_cmd);
    auto* st_steps = st_cmd->add_option("--steps", st.steps, "Simulate this many purchases")
                         ->check(CLI::PositiveNumber);
    auto* st_seed = st_cmd->add_option("--seed", st.seed, "RNG seed");
    st_cmd->add_option("--prices", st.prices, "Price model")
        ->check(CLI::IsMember({"uniform", "triangular"}));
    auto* st_peak = st_cmd->add_option("--peak", st.peak, "Mode of the triangular price model");
    st_cmd->add_option("--out", st.out, "Output file (per-amount CSV, or JSON with --steps)");
    st_cmd->callback([&] {
        st.steps_given = st_steps->count() > 0;
        st.seed_given = st_seed->count() > 0;
        st.peak_given = st_peak->count() > 0;
        run_stats(st);
    });

    // ca
    CaArgs ca_args;
    auto* ca_cmd = app.add_subcommand("ca", "Elementary cellular automaton triangle");
    ca_cmd->add_option("--rule", ca_args.rule, "Wolfram rule number")->check(CLI::Range(0, 255));
    ca_cmd->add_option("--rows", ca_args.rows, "Rows (and columns) to generate")
        ->check(CLI::PositiveNumber);
    ca_cmd->add_option("--format", ca_args.format, "Output format")
        ->check(CLI::IsMember({"pbm", "svg"}));
    ca_cmd->add_option("--out", ca_args.out, "Output file (stdout when omitted)");
    ca_cmd->callback([&] { run_ca(ca_args); });

    // pascal
    PascalArgs pa;
    auto* pa_cmd = app.add_subcommand("pascal", "Pascal's triangle with nonzero residues marked");
    pa_cmd->add_option("--mod", pa.mod, "Modulus")->required()->check(CLI::Range(2, 1000000));
    pa_cmd->add_option("--rows", pa.rows, "Rows to generate")->check(CLI::PositiveNumber);
    pa_cmd->add_option("--format", pa.format, "Output format")
        ->check(CLI::IsMember({"pbm", "svg"}));
    pa_cmd->add_option("--out", pa.out, "Output file (stdout when omitted)");
    pa_cmd->callback([&] { run_pascal(pa); });

    // compare
    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Cell-by-cell comparison of two triangle grids");
    cmp_cmd->add_flag("--rule60", cmp.use_rule60, "Rule-60 automaton triangle");
    auto* cmp_pascal = cmp_cmd->add_option("--pascal", cmp.pascal, "Pascal's triangle mod this value")
                           ->check(CLI::Range(2, 1000000));
    auto* cmp_mapped =
        cmp_cmd->add_option("--mapped-geometric", cmp.mapped,
                            "Predicted point set of a geometric currency with this ratio, "
                            "sheared into triangle coordinates")
            ->check(CLI::Range(2, 1000));
    cmp_cmd->add_option("--rows", cmp.rows, "Rows to compare")->check(CLI::PositiveNumber);
    cmp_cmd->callback([&] {
        cmp.pascal_given = cmp_pascal->count() > 0;
        cmp.mapped_given = cmp_mapped->count() > 0;
        run_compare(cmp);
    });

    // oracle-check
    OracleArgs ora;
    auto* ora_cmd = app.add_subcommand(
        "oracle-check", "Cross-check the efficient payment against brute-force search");
    ora.currency = add_currency_options(ora_cmd);
    ora_cmd->add_option("--cases", ora.cases, "Number of random cases")->check(CLI::PositiveNumber);
    ora_cmd->add_option("--seed", ora.seed, "RNG seed for the random cases");
    ora_cmd->callback([&] { exit_code = run_oracle_check(ora); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const minpay::Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
