#include "travel/service/export.hpp"

#include <sstream>

namespace travel::service {
namespace {

std::string hour_text(Hours h) {
    // "14:00" -> "2:00 PM"
    const int minutes = static_cast<int>(h * 60.0 + 0.5);
    int hh = minutes / 60;
    const int mm = minutes % 60;
    const char* suffix = hh >= 12 ? "PM" : "AM";
    hh %= 12;
    if (hh == 0) hh = 12;
    std::ostringstream out;
    out << hh << ':' << (mm < 10 ? "0" : "") << mm << ' ' << suffix;
    return out.str();
}

std::string duration_text(Hours h) {
    std::ostringstream out;
    out << h << (h == 1.0 ? " hour" : " hours");
    return out.str();
}

std::string stars(int band) {
    return std::string(static_cast<std::size_t>(std::max(1, band)), '$');
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return out;
}

void flight_block(std::ostringstream& out, const Flight& f) {
    out << "Flight Info:\n"
        << "- Flight Number: " << f.flight_number << "\n"
        << "- Airline: " << f.airline << "\n";
    if (!f.airplane.empty()) out << "- Airplane: " << f.airplane << "\n";
    out << "- Departure Airport: " << f.departure_airport.name << "\n"
        << "- Arrival Airport: " << f.arrival_airport.name << "\n"
        << "- Total Duration: " << f.total_duration << " minutes\n"
        << "- Round Trip Price: " << format_money(f.round_trip_price) << "\n";
}

void hotel_block(std::ostringstream& out, const Hotel& h) {
    out << "Hotel Info:\n"
        << "- Name: " << h.name << "\n"
        << "- Address: " << h.address << "\n"
        << "- Check-in Time: " << hour_text(h.check_in_time) << "\n"
        << "- Check-out Time: " << hour_text(h.check_out_time) << "\n"
        << "- Total Price: " << format_money_compact(h.total_price) << "\n"
        << "- Rating: " << h.rating << "\n";
    if (!h.amenities.empty()) out << "- Amenities: " << join(h.amenities) << "\n";
    if (!h.image.empty()) out << "- Image: " << h.image << "\n";
}

void sight_block(std::ostringstream& out, const Attraction& a) {
    out << "Sight Info:\n"
        << "- Name: " << a.name << "\n"
        << "- Address: " << a.address << "\n"
        << "- Price: " << (a.price_per_person.is_free() ? std::string("Free") : format_money(a.price_per_person)) << "\n"
        << "- Rating: " << a.rating << "\n"
        << "- Description: " << a.description << "\n"
        << "- Recommended Duration: " << duration_text(a.recommend_duration) << "\n";
    if (!a.image.empty()) out << "- Image: " << a.image << "\n";
}

void restaurant_block(std::ostringstream& out, const Restaurant& r) {
    out << "Restaurant Info:\n"
        << "- Name: " << r.name << "\n"
        << "- Address: " << r.address << "\n"
        << "- Cuisine: " << r.cuisine << "\n"
        << "- Price: " << stars(r.price_band) << "\n"
        << "- Rating: " << r.rating << "\n";
    if (!r.phone.empty()) out << "- Phone: " << r.phone << "\n";
}

std::string title_case(const std::string& location) {
    std::string out = location;
    bool start = true;
    for (auto& c : out) {
        if (start && std::isalpha(static_cast<unsigned char>(c))) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        start = c == ' ' || c == ',' || c == '-';
    }
    return out;
}

} // namespace

std::string render_markdown(const PlanDocument& doc) {
    const auto& r = doc.request;
    std::ostringstream out;
    out << "# Trip from " << title_case(r.departure) << " to " << title_case(r.destination) << "\n\n";
    out << format_long_date(r.outbound_date) << " to " << format_long_date(r.return_date) << ", " << r.adults_num
        << " adult(s)";
    if (r.children_num > 0) out << " and " << r.children_num << " child(ren)";
    out << ".\n\n";

    if (doc.budget) {
        out << "## Budget\n\n| Category | Amount | Reason |\n|---|---|---|\n";
        for (auto c : budget::kCategories) {
            out << "| " << budget::display_name(c) << " | " << format_money_compact(doc.budget->amount(c)) << " | "
                << doc.budget->reasons[static_cast<std::size_t>(c)] << " |\n";
        }
        out << "\nRound-trip flights: " << format_money(doc.budget->flights) << "\n\n";
    }

    for (const auto& day : doc.itinerary.days) {
        out << "## " << format_long_date(day.date) << "\n\n";
        for (const auto& p : day.points) {
            // Legs that round to zero minutes are not worth a line.
            const bool is_leg = p.kind == RouteKind::transfer || p.kind == RouteKind::return_to_hotel;
            if (is_leg && format_clock(p.start) == format_clock(p.end)) continue;
            out << format_clock(p.start) << " to " << format_clock(p.end) << ": ";
            switch (p.kind) {
            case RouteKind::flight: {
                const bool outbound = p.item_ref == doc.flights.outbound.id;
                const Flight& f = outbound ? doc.flights.outbound : doc.flights.inbound;
                out << (outbound ? "Outbound flight (" : "Return flight (") << f.flight_number << " from "
                    << title_case(outbound ? r.departure : r.destination) << " to "
                    << title_case(outbound ? r.destination : r.departure) << ").\n";
                flight_block(out, f);
                break;
            }
            case RouteKind::check_in:
                out << "Check-in at " << p.note << ".\n";
                if (doc.hotel) hotel_block(out, *doc.hotel);
                break;
            case RouteKind::check_out:
                out << "Hotel check-out and prepare for the return flight.\n";
                if (doc.hotel) hotel_block(out, *doc.hotel);
                break;
            case RouteKind::visit: {
                out << "Visit " << p.note << ".\n";
                if (auto it = doc.attractions.find(p.item_ref); it != doc.attractions.end()) sight_block(out, it->second);
                break;
            }
            case RouteKind::meal: {
                auto it = doc.restaurants.find(p.item_ref);
                out << "Have " << p.note << " at " << (it == doc.restaurants.end() ? p.item_ref : it->second.name)
                    << ".\n";
                if (it != doc.restaurants.end()) restaurant_block(out, it->second);
                break;
            }
            case RouteKind::transfer:
                out << "Travel to " << (p.note.empty() ? std::string("the next stop") : p.note) << ".\n";
                break;
            case RouteKind::return_to_hotel:
                out << "Return to " << (doc.hotel ? doc.hotel->name : std::string("the city centre")) << ".\n";
                break;
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace travel::service
