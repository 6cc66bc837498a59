// Command-line driver: runs verification suites over parameter grids and
// emits deterministic JSON or markdown reports.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hecke/markov_trace.hpp"
#include "hecke/suites.hpp"

namespace {

hecke::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return hecke::rational_from_string(text);
        hecke::Rational num = hecke::rational_from_string(text.substr(0, slash));
        hecke::Rational den = hecke::rational_from_string(text.substr(slash + 1));
        if (den == 0) throw hecke::Error("zero denominator");
        hecke::Rational out = num / den;
        out.canonicalize();
        return out;
    } catch (const std::exception&) {
        throw CLI::ValidationError("cannot parse rational '" + text + "'");
    }
}

// accepts "p/r" or the literal "e^{i pi/m}"
bool parse_root_of_unity(const std::string& text, int& m) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const std::string prefix = "e^{ipi/";
    if (s.rfind(prefix, 0) != 0 || s.back() != '}') return false;
    try {
        m = std::stoi(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    } catch (const std::exception&) {
        return false;
    }
    return m != 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Hecke-algebra symmetries, quantum determinants "
                 "and Markov-trace classification"};

    std::string suite = "all";
    std::vector<int> dims = {2, 3};
    int max_n = 5;
    std::string q_text = "4";
    std::string mu_text;
    std::string lambda_text;
    std::string mode = "exact";
    double tolerance = 1e-10;
    std::string format = "json";
    std::string out_path;
    std::string gram_csv_path;
    int gram_n = 3;
    int jobs = 1;
    bool force = false;

    app.add_option("--suite", suite, "suite name (see --list-suites)")->capture_default_str();
    app.add_option("--d", dims, "local dimensions to cover")->capture_default_str();
    app.add_option("--n", max_n, "largest algebra order / tensor power")
        ->capture_default_str();
    app.add_option("--q", q_text, "specialization point q0 as a rational p/r")
        ->capture_default_str();
    app.add_option("--mu", mu_text, "mu as a rational p/r or the literal e^{i pi/m}");
    app.add_option("--lambda", lambda_text, "trace parameter to classify (rational)");
    app.add_option("--mode", mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}))
        ->capture_default_str();
    app.add_option("--tolerance", tolerance, "numeric tolerance")->capture_default_str();
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--jobs", jobs, "worker threads for grid cases")->capture_default_str();
    app.add_flag("--force", force, "lift the d <= 4 / n <= 6 grid caps");
    app.add_option("--gram-csv", gram_csv_path,
                   "write the Gram matrix at (--n, --lambda, --q) as exact-rational CSV and exit");
    app.add_option("--gram-n", gram_n, "order for --gram-csv")->capture_default_str();
    bool list_suites = false;
    app.add_flag("--list-suites", list_suites, "print the available suites and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_suites) {
            for (const auto& name : hecke::suite_names()) std::cout << name << "\n";
            return 0;
        }

        hecke::SuiteOptions options;
        options.dims = dims;
        options.max_n = max_n;
        options.q0 = parse_rational(q_text);
        options.numeric_mode = (mode == "numeric");
        options.tolerance = tolerance;
        options.jobs = jobs;
        options.force = force;
        if (!mu_text.empty()) {
            int m = 0;
            if (parse_root_of_unity(mu_text, m)) {
                options.mu_root_order = m;
            } else {
                options.mu_rational = parse_rational(mu_text);
                options.q0 = *options.mu_rational * *options.mu_rational;
            }
        }
        if (!lambda_text.empty()) options.lambda = parse_rational(lambda_text);

        if (!gram_csv_path.empty()) {
            hecke::Rational lambda =
                options.lambda.value_or(hecke::lambda_ladder(-2).eval_sqrt_q(options.q0).as_rational());
            std::ofstream csv(gram_csv_path);
            if (!csv) throw hecke::Error("cannot open " + gram_csv_path);
            hecke::export_gram_csv(csv, gram_n, lambda, options.q0);
            return 0;
        }

        const bool known =
            std::find(hecke::suite_names().begin(), hecke::suite_names().end(), suite) !=
            hecke::suite_names().end();
        if (!known) {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }

        auto t0 = std::chrono::steady_clock::now();
        auto reports = hecke::run_suite(suite, options);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

        std::vector<std::pair<std::string, std::string>> flags = {
            {"suite", suite},
            {"d", [&] {
                 std::string s;
                 for (size_t i = 0; i < dims.size(); ++i)
                     s += (i ? "," : "") + std::to_string(dims[i]);
                 return s;
             }()},
            {"n", std::to_string(max_n)},
            {"q", hecke::rational_to_string(options.q0)},
            {"mode", mode},
            {"format", format},
        };
        if (!mu_text.empty()) flags.emplace_back("mu", mu_text);
        if (!lambda_text.empty()) flags.emplace_back("lambda", lambda_text);

        std::string document;
        if (format == "json")
            document = hecke::reports_to_json(reports, flags, elapsed).dump(2) + "\n";
        else
            document = hecke::reports_to_markdown(reports);

        if (out_path.empty()) {
            std::cout << document;
        } else {
            std::ofstream out(out_path);
            if (!out) throw hecke::Error("cannot open " + out_path);
            out << document;
        }
        return hecke::all_passed(reports) ? 0 : 1;
    } catch (const hecke::UnknownSuite& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hecke::InvalidGrid& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
