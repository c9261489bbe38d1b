#include "travel/core/error.hpp"
#include "travel/domain/json_io.hpp"
#include "travel/eval/sim_eval.hpp"
#include "travel/memory/document_store.hpp"
#include "travel/service/config.hpp"
#include "travel/service/http.hpp"
#include "travel/service/trip_service.hpp"
#include "travel/toolkit/catalog.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace travel;
using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + p.string());
    out << text;
    if (!out) throw Error(ErrorCode::Io, "short write to " + p.string());
}

json read_json(const std::filesystem::path& p) {
    try {
        return json::parse(read_file(p));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, p.string() + ": " + e.what());
    }
}

// A form file holds one form or a list of them.
json pick_form(const json& doc, std::size_t index) {
    if (doc.is_object()) return doc;
    if (!doc.is_array()) throw Error(ErrorCode::MalformedDocument, "form file must hold an object or a list");
    if (index >= doc.size()) {
        throw Error(ErrorCode::InvalidValue, "form index " + std::to_string(index) + " out of range (" +
                                                 std::to_string(doc.size()) + " forms)");
    }
    return doc.at(index);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto b = part.find_first_not_of(' ');
        const auto e = part.find_last_not_of(' ');
        if (b != std::string::npos) out.push_back(part.substr(b, e - b + 1));
    }
    return out;
}

service::ServiceConfig base_config(const std::string& config_file) {
    return config_file.empty() ? service::ServiceConfig{} : service::load_config(config_file);
}

std::function<void()> g_stop;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trip planning engine: batch planning, evaluation, export and the HTTP service."};
    app.require_subcommand(1);

    std::string config_file;
    app.add_option("--config", config_file, "key = value config file")->check(CLI::ExistingFile);

    // plan
    auto* plan = app.add_subcommand("plan", "plan one form non-interactively and write the trip file");
    std::string form_file, fixtures, out_file, plan_format = "json", user_id;
    std::size_t form_index = 0;
    plan->add_option("--form", form_file, "input form JSON (object or list)")->required()->check(CLI::ExistingFile);
    plan->add_option("--index", form_index, "form index when the file holds a list");
    plan->add_option("--fixtures", fixtures, "fixture pack directory")->check(CLI::ExistingDirectory);
    plan->add_option("--out", out_file, "output file")->required();
    plan->add_option("--format", plan_format, "json (trip file) or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    plan->add_option("--user", user_id, "user id (defaults to the form's user_name)");

    // eval
    auto* evalc = app.add_subcommand("eval", "run the simulated-user rating prediction stream");
    eval::EvalConfig ecfg;
    std::string methods = "all", forms_file = "data/forms/input_forms.json", csv_out, summary_out, svg_out;
    std::string eval_fixtures = "data/fixtures";
    evalc->add_option("--users", ecfg.users, "simulated users")->check(CLI::PositiveNumber);
    evalc->add_option("--scenarios", ecfg.scenarios, "scenarios per user")->check(CLI::PositiveNumber);
    evalc->add_option("--k", ecfg.k, "items presented per scenario")->check(CLI::PositiveNumber);
    evalc->add_option("--methods", methods, "comma list such as memory/with_history, or 'all'");
    evalc->add_option("--seed", ecfg.seed, "RNG seed");
    evalc->add_option("--noise", ecfg.noise_std, "rating noise std")->check(CLI::NonNegativeNumber);
    evalc->add_option("--forms", forms_file, "forms used to pick scenarios")->check(CLI::ExistingFile);
    evalc->add_option("--fixtures", eval_fixtures, "fixture pack directory")->check(CLI::ExistingDirectory);
    evalc->add_option("--summary", summary_out, "markdown summary (stdout when omitted)");
    auto* csv_opt = evalc->add_option("--out", csv_out, "smoothed series CSV");
    evalc->add_option("--svg", svg_out, "chart of the smoothed series")->needs(csv_opt);

    // export
    auto* exportc = app.add_subcommand("export", "render a trip file");
    std::string trip_file, export_format = "markdown", export_out;
    exportc->add_option("--trip", trip_file, "trip file written by 'plan'")->required()->check(CLI::ExistingFile);
    exportc->add_option("--format", export_format, "markdown or json")->check(CLI::IsMember({"json", "markdown"}));
    exportc->add_option("--out", export_out, "output file (stdout when omitted)");

    // serve
    auto* serve = app.add_subcommand("serve", "run the HTTP API");
    std::string host, state_dir, serve_fixtures;
    int port = -1;
    serve->add_option("--host", host, "listen address");
    serve->add_option("--port", port, "listen port (0 picks one)")->check(CLI::Range(0, 65535));
    serve->add_option("--state", state_dir, "session and memory directory");
    serve->add_option("--fixtures", serve_fixtures, "fixture pack directory")->check(CLI::ExistingDirectory);

    // plot
    auto* plot = app.add_subcommand("plot", "chart a series CSV as SVG");
    std::string plot_csv, plot_out;
    plot->add_option("--csv", plot_csv, "series CSV from 'eval'")->required()->check(CLI::ExistingFile);
    plot->add_option("--out", plot_out, "SVG file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*plan) {
            service::ServiceConfig cfg = base_config(config_file);
            if (!fixtures.empty()) cfg.fixtures = fixtures;
            auto catalog = std::make_shared<tools::Catalog>(tools::load_fixture_dir(cfg.fixtures));
            auto provider = std::make_shared<tools::FixtureProvider>(catalog, cfg.planner.travel_speed_kmh);
            auto docs = std::make_shared<memory::InMemoryStore>();
            auto mem = std::make_shared<memory::MemoryStore>(docs);
            auto text = service::make_text_model(cfg.model);
            std::shared_ptr<const rec::PreferenceModel> model;
            if (text) model = std::make_shared<rec::LlmPreferenceModel>(text);
            service::TripService svc({provider, docs, mem, model, text}, cfg);
            const auto res = svc.run_noninteractive(pick_form(read_json(form_file), form_index), user_id);
            const auto s = svc.session(res.trip_id);
            write_file(out_file, plan_format == "json" ? service::session_to_json(s).dump(2) + "\n"
                                                       : service::export_session(s, "markdown"));
            std::cerr << "wrote " << out_file << " (" << res.itinerary.days.size() << " days)\n";
            return 0;
        }

        if (*evalc) {
            if (methods != "all") {
                ecfg.methods.clear();
                for (const auto& m : split_list(methods)) ecfg.methods.push_back(eval::parse_method(m));
                if (ecfg.methods.empty()) throw Error(ErrorCode::InvalidValue, "no methods given");
            }
            const auto catalog = tools::load_fixture_dir(eval_fixtures);
            const json forms = read_json(forms_file);
            std::vector<TravelRequest> requests;
            for (const auto& f : forms) requests.push_back(parse_input_form(f).request);
            const auto scenarios = eval::build_scenarios(requests, catalog, ecfg.scenarios);
            const auto users = eval::make_users(ecfg.users, ecfg.seed, ecfg.noise_std, ecfg.weight_scale);
            const auto runs = eval::run_stream(users, scenarios, ecfg);
            if (!csv_out.empty()) eval::write_series_csv(runs, csv_out);
            if (!svg_out.empty()) write_file(svg_out, eval::render_svg(eval::read_series_csv(csv_out)));
            const std::string table = eval::summary_table(runs);
            if (summary_out.empty()) {
                std::cout << table;
            } else {
                write_file(summary_out, table);
            }
            return 0;
        }

        if (*exportc) {
            const auto s = service::session_from_json(read_json(trip_file));
            const std::string doc = service::export_session(s, export_format);
            if (export_out.empty()) {
                std::cout << doc;
                if (!doc.empty() && doc.back() != '\n') std::cout << '\n';
            } else {
                write_file(export_out, doc);
            }
            return 0;
        }

        if (*serve) {
            service::ServiceConfig cfg = base_config(config_file);
            if (!host.empty()) cfg.host = host;
            if (port >= 0) cfg.port = port;
            if (!state_dir.empty()) cfg.state_dir = state_dir;
            if (!serve_fixtures.empty()) cfg.fixtures = serve_fixtures;
            service::HttpServer server(service::make_service(cfg));
            const int bound = server.bind(cfg.host, cfg.port);
            g_stop = [&server] { server.stop(); };
            std::signal(SIGINT, [](int) { if (g_stop) g_stop(); });
            std::signal(SIGTERM, [](int) { if (g_stop) g_stop(); });
            std::cerr << "listening on http://" << cfg.host << ":" << bound << "\n";
            server.listen();
            return 0;
        }

        if (*plot) {
            write_file(plot_out, eval::render_svg(eval::read_series_csv(plot_csv)));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
