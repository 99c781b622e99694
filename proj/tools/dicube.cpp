#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dicube/category.hpp"
#include "dicube/errors.hpp"
#include "dicube/homology.hpp"
#include "dicube/io.hpp"
#include "dicube/models.hpp"
#include "dicube/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

bool is_poset_model(const std::string& id) { return id != "en" && id != "quotient" && id != "rplus-quotient"; }

std::string render_json(const std::string& model, int n) {
    if (dicube::is_complex_model(model)) return dicube::complex_to_json(dicube::complex_model(model, n)) + "\n";
    if (dicube::is_category_model(model)) return dicube::to_json(dicube::category_model(model, n)) + "\n";
    throw dicube::ArgumentError("unknown model: " + model);
}

std::string render_dot(const std::string& model, int n) {
    if (dicube::is_complex_model(model)) return dicube::complex_to_dot(dicube::complex_model(model, n));
    if (dicube::is_category_model(model)) return dicube::to_dot(dicube::category_model(model, n), is_poset_model(model));
    throw dicube::ArgumentError("unknown model: " + model);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dicube::ArgumentError("cannot write " + path);
    out << text;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> ids;
    if (s == "all") return dicube::suite_ids();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ids.push_back(item);
    }
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed cubical models of configuration spaces"};
    app.require_subcommand(1);

    std::string model, out_path, format = "json", suite, target = "yA";
    int n = 0, n_max = 3, jobs = 1;
    std::size_t samples = 1000;
    bool no_timing = false;

    auto* gen = app.add_subcommand("gen", "Build a model and write it as JSON");
    gen->add_option("model", model, "Model id")->required();
    gen->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--out", out_path, "Output file");

    auto* hom = app.add_subcommand("homology", "Integral homology of a model");
    hom->add_option("--model", model, "Model id")->required();
    hom->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    hom->add_option("--out", out_path, "Output file");

    auto* ver = app.add_subcommand("verify", "Run named verification checks");
    ver->add_option("--suite", suite, "Comma separated ids, or all")->required();
    ver->add_option("--n-max", n_max, "Size bound")->check(CLI::NonNegativeNumber);
    ver->add_option("--jobs", jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
    ver->add_option("--target", target, "non-self-linked target: yA or z")->check(CLI::IsMember({"yA", "z"}));
    ver->add_option("--samples", samples, "Random configurations for cover-complete");
    ver->add_flag("--no-timing", no_timing, "Omit wall times from the report");
    ver->add_option("--out", out_path, "Output file");

    auto* exp = app.add_subcommand("export", "Export a model as JSON or Graphviz");
    exp->add_option("--model", model, "Model id")->required();
    exp->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    exp->add_option("--out", out_path, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            emit(render_json(model, n), out_path);
        } else if (*hom) {
            if (!dicube::is_category_model(model) && !dicube::is_complex_model(model)) {
                throw dicube::ArgumentError("unknown model: " + model);
            }
            std::vector<dicube::HomologyGroup> h;
            if (dicube::is_category_model(model)) {
                h = dicube::model_homology(model, n);
            } else {
                h = dicube::homology(dicube::cubical_chain_complex(dicube::complex_model(model, n)));
            }
            emit(dicube::homology_to_json(dicube::trimmed(h)) + "\n", out_path);
        } else if (*ver) {
            dicube::SuiteOptions opts;
            opts.n_max = n_max;
            opts.target = target;
            opts.random_samples = samples;
            auto reports = dicube::run_suite(split_ids(suite), opts, jobs);
            emit(dicube::reports_to_json(reports, !no_timing) + "\n", out_path);
            for (const auto& r : reports) {
                if (r.status == dicube::Status::Fail) return kExitFail;
            }
        } else if (*exp) {
            emit(format == "dot" ? render_dot(model, n) : render_json(model, n), out_path);
        }
    } catch (const dicube::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dicube::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const dicube::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
