#include "toric/io.hpp"

#include "toric/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace toric {

GeneratorSet parse_instance(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("instance must be a JSON object");
    }
    if (!j.contains("d") || !j["d"].is_number_integer()) {
        throw ValidationError("instance needs an integer field \"d\"");
    }
    if (!j.contains("A") || !j["A"].is_array()) {
        throw ValidationError("instance needs an array field \"A\"");
    }
    const auto d = j["d"].get<std::int64_t>();
    if (d < 1 || d > 16) {
        throw ValidationError("d must lie in 1..16");
    }
    std::vector<LatticeVector> pts;
    for (const auto& p : j["A"]) {
        if (!p.is_array() || static_cast<std::int64_t>(p.size()) != d) {
            throw ValidationError("every point of A must be an array of length d = " + std::to_string(d));
        }
        std::vector<std::int64_t> c;
        for (const auto& x : p) {
            if (!x.is_number_integer()) {
                throw ValidationError("coordinates must be integers");
            }
            c.push_back(x.get<std::int64_t>());
        }
        pts.emplace_back(std::move(c));
    }
    return GeneratorSet::create(static_cast<int>(d), std::move(pts));
}

GeneratorSet parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(j);
}

GeneratorSet load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

json to_json(const LatticeVector& v) { return json(std::vector<std::int64_t>(v.coords().begin(), v.coords().end())); }

json to_json(const std::vector<LatticeVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
        out.push_back(to_json(v));
    }
    return out;
}

json instance_to_json(const GeneratorSet& a) { return json{{"d", a.dim()}, {"A", to_json(a.points())}}; }

std::string instance_hash(const GeneratorSet& a) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (const unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    feed(std::to_string(a.dim()) + ";");
    for (const auto& p : a.points()) {
        feed(p.to_string());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const ClassificationReport& r) {
    json j{{"verdict", to_string(r.verdict)}, {"e", r.e}, {"certificates", to_json(r.certificates)}};
    j["singular_vertex"] = r.singular_vertex ? json(*r.singular_vertex) : json(nullptr);
    j["missing_unit"] = r.missing_unit ? json(*r.missing_unit) : json(nullptr);
    j["chart_smooth"] = std::vector<bool>(r.chart_smooth.begin(), r.chart_smooth.end());
    if (!r.failed_condition.empty()) {
        j["failed_condition"] = r.failed_condition;
    }
    if (r.reduced) {
        j["reduced"] = instance_to_json(*r.reduced);
    } else if (r.reduces_to_point) {
        j["reduced"] = "point";
    } else {
        j["reduced"] = nullptr;
    }
    return j;
}

json to_json(const SigmaResult& r) {
    return json{{"sigma", r.sigma},
                {"holes", to_json(r.holes.points)},
                {"t0", r.bounds.t0},
                {"s0", r.bounds.s0},
                {"lower", r.bounds.lower},
                {"alt_lower", r.bounds.alt_lower},
                {"upper", r.bounds.upper},
                {"window_verified", {r.window_lo, r.window_hi}},
                {"step_verified", r.step_verified}};
}

json to_json(const RegularityResult& r) {
    json j{{"reg", r.reg},
           {"witness_y", to_json(r.witness_y)},
           {"witness_i", r.witness_i},
           {"cutoff_norm", r.cutoff_norm},
           {"method", r.method},
           {"certified", r.certified},
           {"field", field_name(r.field)},
           {"points_examined", r.points_examined},
           {"field_mismatches", to_json(r.field_mismatches)},
           {"maximizer_count", r.maximizers.size()},
           {"maximizers_truncated", r.maximizers_truncated}};
    j["sigma"] = r.sigma ? json(*r.sigma) : json(nullptr);
    return j;
}

json to_json(const DegreeResult& r) {
    return json{{"theta", r.theta.get_str()}, {"degree", r.degree.get_str()}, {"codim", r.codim},
                {"minors_examined", r.minors_examined}};
}

json to_json(const EGResult& r) {
    return json{{"reg", r.reg},          {"degree", r.degree.get_str()}, {"codim", r.codim},
                {"bound", r.bound.get_str()}, {"holds", r.holds},         {"slack", r.slack.get_str()},
                {"enforced", r.enforced}};
}

json to_json(const FaceComplex& c, const ReducedHomologyProfile& p) {
    json betti = json::object();
    for (std::size_t k = 0; k < p.betti.size(); ++k) {
        betti[std::to_string(static_cast<int>(k) - 1)] = p.betti[k];
    }
    return json{{"y", to_json(c.y)}, {"faces_bitmask_list", c.face_list()}, {"betti", betti}, {"field", field_name(p.field)}};
}

std::string plot_svg(SumsetTable& table, std::int64_t s) {
    const GeneratorSet& a = table.generators();
    if (a.dim() != 2) {
        throw UnsupportedInstanceError("plots need d = 2");
    }
    const SumsetLevel& level = table.level(s);
    const std::int64_t top = level.slice().max_norm();
    const int cell = 24;
    const int margin = 40;
    const std::int64_t side = 2 * margin + top * cell;
    auto px = [&](std::int64_t x) { return margin + x * cell; };
    auto py = [&](std::int64_t y) { return margin + (top - y) * cell; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    os << "<title>" << s << "A in Delta_{" << s << ',' << a.divisor() << "}, D = " << a.degree() << "</title>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(top) + cell / 2 << "\" y2=\"" << py(0)
       << "\" stroke=\"gray\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(top) - cell / 2
       << "\" stroke=\"gray\"/>\n";
    os << "<text x=\"" << px(top) + cell / 2 << "\" y=\"" << py(0) + 20 << "\" font-size=\"12\">y1</text>\n";
    os << "<text x=\"" << px(0) - 30 << "\" y=\"" << py(top) - cell / 2 << "\" font-size=\"12\">y2</text>\n";
    for (SimplexSlice::Cursor c(level.slice(), 0); c.valid(); c.next()) {
        const std::int64_t x = c.data()[0];
        const std::int64_t y = c.data()[1];
        if (level.test_rank(c.index())) {
            os << "<circle class=\"member\" cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"6\" fill=\"black\"/>\n";
        } else {
            os << "<rect class=\"gap\" x=\"" << px(x) - 6 << "\" y=\"" << py(y) - 6
               << "\" width=\"12\" height=\"12\" fill=\"none\" stroke=\"black\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace toric
