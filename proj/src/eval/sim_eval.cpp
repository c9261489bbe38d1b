#include "travel/eval/sim_eval.hpp"

#include "travel/core/error.hpp"
#include "travel/memory/memory_store.hpp"
#include "travel/recommend/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace travel::eval {
namespace {

// splitmix64, to derive independent per-user seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double sigmoid(double z) {
    return 1.0 / (1.0 + std::exp(-z));
}

void record(EvalRun& run, std::size_t index, double err) {
    if (run.abs_sum.size() <= index) {
        run.abs_sum.resize(index + 1, 0.0);
        run.sq_sum.resize(index + 1, 0.0);
        run.count.resize(index + 1, 0);
    }
    run.abs_sum[index] += std::abs(err);
    run.sq_sum[index] += err * err;
    ++run.count[index];
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << v;
    return out.str();
}

// Per-user learning state for one stream.
struct UserState {
    std::vector<rec::RatedItem> history;
    std::optional<rec::UserProfile> profile;
    memory::MemoryStore memory{std::make_shared<memory::InMemoryStore>()};
};

std::vector<double> predict(const Method& m, UserState& st, const std::vector<Attraction>& items,
                            const Scenario& sc, const SoftConstraintSet& soft, const EvalConfig& cfg) {
    rec::PredictorOptions opt = cfg.predictor;
    opt.hard = sc.request;
    switch (m.scheme) {
    case rec::Scheme::memory:
        if (m.with_history) {
            opt.soft = soft;
            return rec::predict_ratings(st.history, nullptr, items, rec::Scheme::memory, opt);
        }
        opt.soft = soft;
        return rec::predict_ratings({}, nullptr, items, rec::Scheme::memory, opt);
    case rec::Scheme::direct:
        if (!m.with_history || st.history.empty()) return rec::prior_ratings(items, sc.request);
        return rec::predict_ratings(st.history, nullptr, items, rec::Scheme::direct, opt);
    case rec::Scheme::decode_encode:
        if (!st.profile) return rec::prior_ratings(items, sc.request);
        return rec::predict_ratings(m.with_history ? st.history : std::vector<rec::RatedItem>{}, &*st.profile, items,
                                    rec::Scheme::decode_encode, opt);
    }
    return {};
}

} // namespace

void validate(const SimulatedUser& u) {
    for (double w : u.preference_weights) {
        if (!std::isfinite(w)) throw Error(ErrorCode::InvalidValue, "user " + u.id + " has a non-finite weight");
    }
    if (!(u.noise_std >= 0.0)) throw Error(ErrorCode::InvalidValue, "user " + u.id + " has negative noise");
}

std::vector<SimulatedUser> make_users(std::size_t n, std::uint64_t seed, double noise_std, double weight_scale) {
    std::vector<SimulatedUser> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SimulatedUser u;
        u.id = "sim-" + std::to_string(i + 1);
        u.seed = mix(seed ^ mix(i + 1));
        u.noise_std = noise_std;
        std::mt19937_64 rng(u.seed);
        std::normal_distribution<double> dist(0.0, weight_scale);
        for (std::size_t j = 0; j < rec::kFeatureDim; ++j) {
            u.preference_weights[j] = j == rec::feature::bias ? 0.5 * dist(rng) : dist(rng);
        }
        validate(u);
        out.push_back(std::move(u));
    }
    return out;
}

int simulate_rating(const SimulatedUser& u, const Attraction& item, std::mt19937_64& rng) {
    const auto f = rec::item_features(item);
    double z = 0.0;
    for (std::size_t i = 0; i < rec::kFeatureDim; ++i) z += u.preference_weights[i] * f[i];
    double r = 1.0 + 4.0 * sigmoid(z);
    if (u.noise_std > 0.0) r += std::normal_distribution<double>(0.0, u.noise_std)(rng);
    return static_cast<int>(std::lround(std::clamp(r, 1.0, 5.0)));
}

RatingStream::RatingStream(SimulatedUser u) : user_(std::move(u)), rng_(user_.seed) {
    validate(user_);
}

int RatingStream::rate(const Attraction& item) {
    return simulate_rating(user_, item, rng_);
}

std::string to_string(const Method& m) {
    return std::string(rec::to_string(m.scheme)) + (m.with_history ? "/with_history" : "/without_history");
}

Method parse_method(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Method{rec::parse_scheme(text), true};
    const auto mode = text.substr(slash + 1);
    if (mode != "with_history" && mode != "without_history") {
        throw Error(ErrorCode::BadField, "unknown method variant '" + std::string(mode) + "'");
    }
    return Method{rec::parse_scheme(text.substr(0, slash)), mode == "with_history"};
}

std::vector<Method> all_methods() {
    std::vector<Method> out;
    for (auto s : {rec::Scheme::memory, rec::Scheme::direct, rec::Scheme::decode_encode}) {
        out.push_back({s, true});
        out.push_back({s, false});
    }
    return out;
}

Scenario scenario_for(const TravelRequest& form, const tools::Catalog& catalog) {
    const std::string key = city_key(form.destination);
    const auto* pack = catalog.find(key);
    if (pack == nullptr) throw Error(ErrorCode::FixtureMissing, "no fixture pack for '" + key + "'");
    if (pack->sights.empty()) throw Error(ErrorCode::FixtureMissing, "fixture pack '" + key + "' has no sights");
    return Scenario{key, form, pack->sights, pack->info.center};
}

std::vector<Scenario> build_scenarios(const std::vector<TravelRequest>& forms, const tools::Catalog& catalog,
                                      std::size_t count) {
    std::vector<Scenario> out;
    for (const auto& f : forms) {
        if (out.size() == count) break;
        if (catalog.find(city_key(f.destination)) == nullptr) continue;
        out.push_back(scenario_for(f, catalog));
    }
    if (out.size() < count) {
        throw Error(ErrorCode::FixtureMissing, "only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                                   " scenarios have fixture packs");
    }
    return out;
}

std::vector<EvalRun> run_stream(const std::vector<SimulatedUser>& users, const std::vector<Scenario>& scenarios,
                                const EvalConfig& cfg) {
    if (cfg.methods.empty()) throw Error(ErrorCode::InvalidValue, "no methods to evaluate");
    for (const auto& s : scenarios) {
        if (s.candidates.empty()) throw Error(ErrorCode::FixtureMissing, "scenario " + s.id + " has no candidates");
    }
    std::vector<EvalRun> runs;
    for (const auto& m : cfg.methods) runs.push_back(EvalRun{m, {}, {}, {}, {}, {}, cfg});

    const rec::DeterministicScorer scorer;
    for (const auto& user : users) {
        RatingStream stream(user);
        UserState st;
        std::vector<std::size_t> order(scenarios.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (cfg.shuffle_scenarios) {
            std::mt19937_64 rng(mix(user.seed));
            std::shuffle(order.begin(), order.end(), rng);
        }
        std::size_t index = 0;
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const Scenario& sc = scenarios[order[pos]];
            const auto known = st.memory.retrieve_insights(user.id);
            const rec::RecommendationContext ctx{sc.request, known.soft, known.commonsense, sc.candidates, {},
                                                 sc.city_center};
            const auto presented = rec::recommend(ctx, scorer, cfg.k);
            std::vector<Attraction> items;
            for (const auto& p : presented) {
                items.push_back(*std::find_if(sc.candidates.begin(), sc.candidates.end(),
                                              [&](const Attraction& a) { return a.id == p.item_ref; }));
            }
            std::vector<double> actual;
            for (const auto& a : items) actual.push_back(stream.rate(a));

            for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
                const auto pred = predict(cfg.methods[mi], st, items, sc, known.soft, cfg);
                if (pred.size() != items.size()) throw Error(ErrorCode::LengthMismatch, "prediction length");
                for (std::size_t j = 0; j < items.size(); ++j) record(runs[mi], index + j, pred[j] - actual[j]);
            }

            // Learning happens after the whole batch has been rated.
            std::vector<rec::RatedItem> batch;
            for (std::size_t j = 0; j < items.size(); ++j) batch.push_back({items[j], actual[j]});
            st.history.insert(st.history.end(), batch.begin(), batch.end());
            if (!st.profile) {
                rec::PredictorOptions opt = cfg.predictor;
                opt.hard = sc.request;
                st.profile = rec::decode_profile(batch, opt);
            }
            const std::string scenario_id = sc.id + "#" + std::to_string(pos + 1);
            auto session = rec::start_session(user.id, scenario_id, ctx, presented);
            st.memory.begin_scenario(user.id, scenario_id);
            for (std::size_t j = 0; j < items.size(); ++j) {
                rec::Feedback f{items[j].id, std::nullopt, static_cast<int>(actual[j]),
                                static_cast<std::int64_t>(index + j + 1)};
                rec::ingest_feedback(session, f);
                st.memory.append_short_term(user.id, f);
            }
            for (auto& r : rec::learn_insights(session, scorer, static_cast<std::int64_t>(index + items.size()))) {
                st.memory.append_short_term(user.id, std::move(r));
            }
            st.memory.consolidate(user.id);
            index += items.size();
        }
    }
    for (auto& run : runs) {
        run.mae.resize(run.count.size());
        run.rmse.resize(run.count.size());
        for (std::size_t i = 0; i < run.count.size(); ++i) {
            const auto n = static_cast<double>(run.count[i]);
            run.mae[i] = run.abs_sum[i] / n;
            run.rmse[i] = std::sqrt(run.sq_sum[i] / n);
        }
    }
    return runs;
}

WindowStats window(const EvalRun& run, std::size_t first, std::size_t last) {
    if (first == 0 || last < first || last > run.count.size()) {
        throw Error(ErrorCode::EmptySeries, "window [" + std::to_string(first) + ", " + std::to_string(last) +
                                                "] outside a series of " + std::to_string(run.count.size()));
    }
    double a = 0.0;
    double s = 0.0;
    double n = 0.0;
    for (std::size_t i = first - 1; i < last; ++i) {
        a += run.abs_sum[i];
        s += run.sq_sum[i];
        n += static_cast<double>(run.count[i]);
    }
    if (n == 0.0) throw Error(ErrorCode::EmptySeries, "window holds no observations");
    return {a / n, std::sqrt(s / n)};
}

double compute_mae(const std::vector<double>& pred, const std::vector<double>& actual) {
    if (pred.empty() || actual.empty()) throw Error(ErrorCode::EmptySeries, "MAE of an empty series");
    if (pred.size() != actual.size()) throw Error(ErrorCode::InvalidValue, "MAE of series with unequal lengths");
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) sum += std::abs(pred[i] - actual[i]);
    return sum / static_cast<double>(pred.size());
}

double compute_rmse(const std::vector<double>& pred, const std::vector<double>& actual) {
    if (pred.empty() || actual.empty()) throw Error(ErrorCode::EmptySeries, "RMSE of an empty series");
    if (pred.size() != actual.size()) throw Error(ErrorCode::InvalidValue, "RMSE of series with unequal lengths");
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) sum += (pred[i] - actual[i]) * (pred[i] - actual[i]);
    return std::sqrt(sum / static_cast<double>(pred.size()));
}

std::vector<WindowStats> smoothed(const EvalRun& run, std::size_t w) {
    if (w == 0) throw Error(ErrorCode::InvalidValue, "smoothing window must be positive");
    std::vector<WindowStats> out;
    for (std::size_t i = 0; i < run.count.size(); ++i) {
        const std::size_t first = i + 1 >= w ? i + 2 - w : 1;
        out.push_back(window(run, first, i + 1));
    }
    return out;
}

std::string series_csv(const std::vector<EvalRun>& runs, std::size_t w) {
    std::string out = "method,interaction_index,mae,rmse\n";
    for (const auto& run : runs) {
        const auto s = smoothed(run, w);
        for (std::size_t i = 0; i < s.size(); ++i) {
            out += to_string(run.method) + "," + std::to_string(i + 1) + "," + fmt(s[i].mae) + "," + fmt(s[i].rmse) + "\n";
        }
    }
    return out;
}

void write_series_csv(const std::vector<EvalRun>& runs, const std::filesystem::path& file, std::size_t w) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << series_csv(runs, w);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + file.string());
}

std::vector<SeriesRow> read_series_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + file.string());
    std::string line;
    std::getline(in, line);
    if (line.rfind("method,interaction_index,mae,rmse", 0) != 0) {
        throw Error(ErrorCode::MalformedDocument, file.string() + " is not a series file");
    }
    std::vector<SeriesRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string method, idx, mae, rmse;
        if (!std::getline(ss, method, ',') || !std::getline(ss, idx, ',') || !std::getline(ss, mae, ',') ||
            !std::getline(ss, rmse, ',')) {
            throw Error(ErrorCode::MalformedDocument, "bad series row '" + line + "'");
        }
        try {
            rows.push_back({method, std::stoul(idx), std::stod(mae), std::stod(rmse)});
        } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedDocument, "bad series row '" + line + "'");
        }
    }
    if (rows.empty()) throw Error(ErrorCode::EmptySeries, file.string() + " has no rows");
    return rows;
}

std::string summary_table(const std::vector<EvalRun>& runs) {
    std::ostringstream out;
    out << "| method | interactions | MAE 1-10 | RMSE 1-10 | MAE last 10 | RMSE last 10 | MAE all | RMSE all |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& run : runs) {
        const std::size_t n = run.count.size();
        if (n == 0) throw Error(ErrorCode::EmptySeries, "run " + to_string(run.method) + " is empty");
        const auto head = window(run, 1, std::min<std::size_t>(10, n));
        const auto tail = window(run, n > 10 ? n - 9 : 1, n);
        const auto all = window(run, 1, n);
        out << "| " << to_string(run.method) << " | " << n << " | " << fmt(head.mae, 4) << " | " << fmt(head.rmse, 4)
            << " | " << fmt(tail.mae, 4) << " | " << fmt(tail.rmse, 4) << " | " << fmt(all.mae, 4) << " | "
            << fmt(all.rmse, 4) << " |\n";
    }
    return out.str();
}

std::string render_svg(const std::vector<SeriesRow>& rows) {
    if (rows.empty()) throw Error(ErrorCode::EmptySeries, "nothing to plot");
    std::vector<std::string> methods;
    std::size_t max_x = 1;
    double max_y = 0.0;
    for (const auto& r : rows) {
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
        max_x = std::max(max_x, r.interaction_index);
        max_y = std::max({max_y, r.mae, r.rmse});
    }
    max_y = std::ceil(max_y * 2.0) / 2.0;
    if (max_y <= 0.0) max_y = 1.0;
    static const char* colours[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"};
    const double pw = 460, ph = 300, left = 60, top = 40, gap = 90;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + 2 * pw + gap + 200 << "\" height=\""
        << top + ph + 70 << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int panel = 0; panel < 2; ++panel) {
        const double x0 = left + panel * (pw + gap);
        auto px = [&](double x) { return x0 + (x - 1.0) / std::max<double>(1.0, static_cast<double>(max_x) - 1.0) * pw; };
        auto py = [&](double y) { return top + ph - y / max_y * ph; };
        svg << "<text x=\"" << x0 + pw / 2 << "\" y=\"" << top - 15 << "\" text-anchor=\"middle\" font-size=\"14\">"
            << (panel == 0 ? "MAE" : "RMSE") << "</text>\n";
        svg << "<rect x=\"" << x0 << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
            << "\" fill=\"none\" stroke=\"#333\"/>\n";
        for (int t = 0; t <= 4; ++t) {
            const double y = max_y * t / 4.0;
            svg << "<line x1=\"" << x0 << "\" x2=\"" << x0 + pw << "\" y1=\"" << py(y) << "\" y2=\"" << py(y)
                << "\" stroke=\"#ddd\"/>\n";
            svg << "<text x=\"" << x0 - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">" << fmt(y, 2)
                << "</text>\n";
        }
        svg << "<text x=\"" << x0 + pw / 2 << "\" y=\"" << top + ph + 35
            << "\" text-anchor=\"middle\">interaction</text>\n";
        svg << "<text x=\"" << x0 << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">1</text>\n";
        svg << "<text x=\"" << x0 + pw << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">" << max_x
            << "</text>\n";
        for (std::size_t m = 0; m < methods.size(); ++m) {
            svg << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << colours[m % 7] << "\" points=\"";
            for (const auto& r : rows) {
                if (r.method != methods[m]) continue;
                svg << fmt(px(static_cast<double>(r.interaction_index)), 2) << ","
                    << fmt(py(panel == 0 ? r.mae : r.rmse), 2) << " ";
            }
            svg << "\"/>\n";
        }
    }
    const double lx = left + 2 * pw + gap + 10;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const double y = top + 10 + 20.0 * static_cast<double>(m);
        svg << "<line x1=\"" << lx << "\" x2=\"" << lx + 20 << "\" y1=\"" << y << "\" y2=\"" << y << "\" stroke=\""
            << colours[m % 7] << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << lx + 26 << "\" y=\"" << y + 4 << "\">" << methods[m] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace travel::eval
