#pragma once

#include "travel/domain/catalog_items.hpp"
#include "travel/domain/request.hpp"
#include "travel/toolkit/catalog.hpp"
#include "travel/toolkit/tools.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

inline std::filesystem::path fixture_dir() { return TRAVEL_FIXTURE_DIR; }
inline std::filesystem::path forms_file() { return TRAVEL_FORMS_FILE; }
inline std::filesystem::path test_data(const std::string& name) {
    return std::filesystem::path(TRAVEL_TEST_DATA_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json forms() { return nlohmann::json::parse(slurp(forms_file())); }

inline travel::TravelRequest form(std::size_t i) { return travel::parse_input_form(forms().at(i)).request; }

inline const travel::tools::Catalog& catalog() {
    static const travel::tools::Catalog c = travel::tools::load_fixture_dir(fixture_dir());
    return c;
}

inline std::shared_ptr<travel::tools::FixtureProvider> provider() {
    return std::make_shared<travel::tools::FixtureProvider>(
        std::make_shared<travel::tools::Catalog>(travel::tools::load_fixture_dir(fixture_dir())));
}

inline travel::Attraction attraction(std::string id, double lat, double lon, double duration, double w0, double w1,
                                     double rating = 4.0) {
    travel::Attraction a;
    a.id = std::move(id);
    a.name = "Sight " + a.id;
    a.position = travel::GeoPoint(lat, lon);
    a.recommend_duration = duration;
    a.recommend_window = travel::TimeWindow(w0, w1);
    a.rating = rating;
    return a;
}

inline travel::Restaurant restaurant(std::string id, double lat, double lon, double rating = 4.0,
                                     std::string cuisine = "Chinese") {
    travel::Restaurant r;
    r.id = std::move(id);
    r.name = "Restaurant " + r.id;
    r.position = travel::GeoPoint(lat, lon);
    r.rating = rating;
    r.cuisine = std::move(cuisine);
    return r;
}

// Unique scratch directory under the system temp dir, removed on scope exit.
class TempDir {
  public:
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() / ("travel-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

  private:
    std::filesystem::path path_;
};

} // namespace support
