#include "travel/recommend/predict.hpp"

#include "travel/core/assets.hpp"
#include "travel/core/error.hpp"
#include "travel/recommend/recommender.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

namespace travel::rec {
namespace {

std::string behaviours_text(const std::vector<RatedItem>& history) {
    std::ostringstream out;
    for (const auto& h : history) out << h.item.name << ": " << h.rating << "\n";
    std::string s = out.str();
    if (!s.empty()) s.pop_back();
    return s;
}

std::string candidates_text(const std::vector<Attraction>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += "\n";
        out += std::to_string(i + 1) + ". " + items[i].name;
    }
    return out;
}

std::vector<double> ask_ratings(const TextModel& model, const std::string& prompt, std::size_t n) {
    try {
        return parse_rating_list(model.complete(prompt), n);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::LengthMismatch) throw;
    }
    return parse_rating_list(model.complete(prompt), n);
}

double clamp_rating(double r) {
    return std::clamp(r, 1.0, 5.0);
}

std::vector<double> knn_all(const std::vector<RatedItem>& history, const std::vector<Attraction>& items,
                            const PredictorOptions& opt) {
    std::vector<double> out;
    out.reserve(items.size());
    for (const auto& a : items) out.push_back(clamp_rating(predict_knn(history, a, opt.knn_window, opt.knn_k)));
    return out;
}

std::string profile_summary(const FeatureVector& w) {
    std::vector<std::pair<double, std::string>> terms;
    terms.emplace_back(w[feature::free], "free entry");
    terms.emplace_back(w[feature::price], "higher prices");
    terms.emplace_back(w[feature::family], "family-friendly places");
    terms.emplace_back(w[feature::adult], "nightlife");
    for (std::size_t i = 0; i < kCategories.size(); ++i) {
        terms.emplace_back(w[feature::first_category + i], std::string(to_string(kCategories[i])) + "s");
    }
    std::sort(terms.begin(), terms.end());
    std::string likes;
    std::string dislikes;
    for (auto it = terms.rbegin(); it != terms.rend() && it->first > 0.05; ++it) {
        likes += (likes.empty() ? "" : ", ") + it->second;
    }
    for (auto it = terms.begin(); it != terms.end() && it->first < -0.05; ++it) {
        dislikes += (dislikes.empty() ? "" : ", ") + it->second;
    }
    std::string out;
    if (!likes.empty()) out += "I like " + likes + ".";
    if (!dislikes.empty()) out += std::string(out.empty() ? "" : " ") + "I dislike " + dislikes + ".";
    return out.empty() ? "I have no strong preferences." : out;
}

} // namespace

std::string_view to_string(Scheme s) {
    switch (s) {
    case Scheme::memory: return "memory";
    case Scheme::direct: return "direct";
    case Scheme::decode_encode: return "decode_encode";
    }
    return "memory";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "memory") return Scheme::memory;
    if (text == "direct") return Scheme::direct;
    if (text == "decode_encode") return Scheme::decode_encode;
    throw Error(ErrorCode::BadField, "unknown scheme '" + std::string(text) + "'");
}

FeatureVector fit_ridge(const std::vector<RatedItem>& data, double lambda) {
    constexpr auto n = static_cast<Eigen::Index>(kFeatureDim);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    for (const auto& d : data) {
        const auto f = item_features(d.item);
        const Eigen::Map<const Eigen::VectorXd> x(f.data(), n);
        a.noalias() += x * x.transpose();
        b.noalias() += d.rating * x;
    }
    for (Eigen::Index i = 1; i < n; ++i) a(i, i) += lambda;
    // Keeps the system solvable with no data at all.
    a(0, 0) += 1e-9;
    const Eigen::VectorXd w = a.ldlt().solve(b);
    FeatureVector out{};
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = w(i);
    return out;
}

double predict_linear(const FeatureVector& w, const Attraction& a) {
    const auto f = item_features(a);
    double z = 0.0;
    for (std::size_t i = 0; i < kFeatureDim; ++i) z += w[i] * f[i];
    return z;
}

double predict_knn(const std::vector<RatedItem>& history, const Attraction& a, std::size_t window, std::size_t k) {
    if (history.empty()) throw Error(ErrorCode::PreconditionFailed, "neighbour estimate needs history");
    const std::size_t first = history.size() > window ? history.size() - window : 0;
    const auto q = item_features(a);
    std::vector<std::pair<double, double>> dist; // (distance, rating)
    for (std::size_t i = first; i < history.size(); ++i) {
        const auto f = item_features(history[i].item);
        double d2 = 0.0;
        for (std::size_t j = 0; j < kFeatureDim; ++j) d2 += (f[j] - q[j]) * (f[j] - q[j]);
        dist.emplace_back(std::sqrt(d2), history[i].rating);
    }
    const std::size_t take = std::min(std::max<std::size_t>(k, 1), dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(take), dist.end());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < take; ++i) {
        const double w = 1.0 / (dist[i].first + 0.1);
        num += w * dist[i].second;
        den += w;
    }
    return num / den;
}

std::vector<double> prior_ratings(const std::vector<Attraction>& items, const TravelRequest& hard) {
    const DeterministicScorer scorer;
    std::vector<double> out;
    out.reserve(items.size());
    for (const auto& a : items) out.push_back(scorer.rate(a, hard, SoftConstraintSet{}));
    return out;
}

std::vector<double> predict_ratings(const std::vector<RatedItem>& history, const UserProfile* profile,
                                    const std::vector<Attraction>& items, Scheme scheme, const PredictorOptions& opt) {
    if (items.empty()) return {};
    std::vector<double> out;
    switch (scheme) {
    case Scheme::memory:
        if (opt.model) {
            RecommendationContext ctx{opt.hard, opt.soft, {}, items, {}, {}};
            const auto scored = LlmPreferenceModel(opt.model).score(ctx);
            for (const auto& a : items) {
                auto it = std::find_if(scored.begin(), scored.end(),
                                       [&](const ScoredItem& s) { return s.item_ref == a.id; });
                out.push_back(it->predicted_rating);
            }
        } else if (history.empty()) {
            const DeterministicScorer scorer;
            for (const auto& a : items) out.push_back(scorer.rate(a, opt.hard, opt.soft));
        } else {
            const auto w = fit_ridge(history, opt.ridge_lambda);
            for (const auto& a : items) out.push_back(clamp_rating(predict_linear(w, a)));
        }
        break;
    case Scheme::direct:
        if (history.empty()) throw Error(ErrorCode::PreconditionFailed, "direct scheme needs rating history");
        if (opt.model) {
            const std::string prompt = render_template(asset("prompts/direct_predict.txt"),
                                                       {{"item_type", "attractions"},
                                                        {"previous_user_behaviours", behaviours_text(history)},
                                                        {"recommend_item_list", candidates_text(items)}});
            out = ask_ratings(*opt.model, prompt, items.size());
        } else {
            out = knn_all(history, items, opt);
        }
        break;
    case Scheme::decode_encode:
        if (profile == nullptr) throw Error(ErrorCode::PreconditionFailed, "decode-encode scheme needs a profile");
        if (opt.model) {
            const bool with_history = !history.empty();
            std::map<std::string, std::string> vars{{"item_type", "attractions"},
                                                    {"user_profile", profile->text},
                                                    {"recommend_item_list", candidates_text(items)}};
            if (with_history) vars["previous_user_behaviours"] = behaviours_text(history);
            const std::string prompt = render_template(
                asset(with_history ? "prompts/profile_encode_with_history.txt"
                                   : "prompts/profile_encode_without_history.txt"),
                vars);
            out = ask_ratings(*opt.model, prompt, items.size());
        } else {
            if (!profile->weights) throw Error(ErrorCode::PreconditionFailed, "profile has no decoded weights");
            for (const auto& a : items) out.push_back(clamp_rating(predict_linear(*profile->weights, a)));
            if (!history.empty()) {
                const auto nn = knn_all(history, items, opt);
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (out[i] + nn[i]);
            }
        }
        break;
    }
    for (auto& r : out) r = clamp_rating(r);
    return out;
}

UserProfile decode_profile(const std::vector<RatedItem>& batch, const PredictorOptions& opt) {
    if (batch.empty()) throw Error(ErrorCode::PreconditionFailed, "nothing to decode a profile from");
    UserProfile p;
    if (opt.model) {
        std::vector<Attraction> items;
        for (const auto& b : batch) items.push_back(b.item);
        const std::string prompt = render_template(asset("prompts/profile_decode.txt"),
                                                   {{"item_type", "attractions"},
                                                    {"recommend_items_list", candidates_text(items)},
                                                    {"user_behaviours", behaviours_text(batch)}});
        p.text = opt.model->complete(prompt);
    } else {
        p.weights = fit_ridge(batch, opt.ridge_lambda);
        p.text = profile_summary(*p.weights);
    }
    return p;
}

std::vector<double> parse_rating_list(std::string_view reply, std::size_t n) {
    std::vector<double> values;
    bool from_json = false;
    try {
        const auto j = nlohmann::json::parse(extract_json_block(reply));
        if (j.is_array()) {
            for (const auto& v : j) {
                if (v.is_number()) {
                    values.push_back(v.get<double>());
                } else if (v.is_object() && v.contains("rating") && v.at("rating").is_number()) {
                    values.push_back(v.at("rating").get<double>());
                } else {
                    throw Error(ErrorCode::LengthMismatch, "non-numeric rating entry");
                }
            }
            from_json = true;
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::LengthMismatch) values.clear();
    } catch (const nlohmann::json::exception&) {
    }
    if (!from_json) {
        static const std::regex number(R"(-?\d+(?:\.\d+)?)");
        const std::string text(reply);
        values.clear();
        for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
            values.push_back(std::stod(it->str()));
        }
        // "1. 4, 2. 3, ..." enumerations carry the index before each rating.
        if (values.size() == 2 * n && n > 0) {
            bool enumerated = true;
            for (std::size_t i = 0; i < n; ++i) enumerated = enumerated && values[2 * i] == static_cast<double>(i + 1);
            if (enumerated) {
                std::vector<double> picked;
                for (std::size_t i = 0; i < n; ++i) picked.push_back(values[2 * i + 1]);
                values = std::move(picked);
            }
        }
    }
    if (values.size() != n) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(n) + " ratings, got " + std::to_string(values.size()));
    }
    for (auto& v : values) v = clamp_rating(v);
    return values;
}

} // namespace travel::rec
