#include "semitoric/io.hpp"

#include "semitoric/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace semitoric {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

[[noreturn]] void schema(const std::string& what) {
    throw DomainError(ErrorKind::InvalidInput, what);
}

void check_format(const json& j) {
    if (!j.is_object()) schema("document must be an object");
    if (j.contains("format") && j["format"] != 1) schema("unsupported format version");
}

Int as_int(const json& j) {
    if (!j.is_number_integer()) schema("expected an integer, got " + j.dump());
    return j.get<Int>();
}

std::vector<Vec2> vectors_of(const json& j) {
    if (!j.contains("vectors") || !j["vectors"].is_array()) schema("missing \"vectors\" array");
    std::vector<Vec2> out;
    for (const auto& e : j["vectors"]) {
        if (!e.is_array() || e.size() != 2) schema("each vector must be [x, y]");
        out.push_back({as_int(e[0]), as_int(e[1])});
    }
    return out;
}

Rational as_rational(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<Int>());
    if (j.is_number_float()) return Rational::parse(j.dump());
    schema("expected a number or numeric string, got " + j.dump());
}

json vectors_json(const std::vector<Vec2>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back({x.x, x.y});
    return arr;
}

}  // namespace

ToricFan fan_from_json(std::string_view text) {
    json j = parse_json(text);
    check_format(j);
    return {vectors_of(j)};
}

SemitoricHelix helix_from_json(std::string_view text) {
    json j = parse_json(text);
    check_format(j);
    SemitoricHelix h;
    if (!j.contains("c")) schema("missing \"c\"");
    h.c = as_int(j["c"]);
    h.vectors = vectors_of(j);
    if (j.contains("d") && as_int(j["d"]) != static_cast<Int>(h.vectors.size()))
        schema("\"d\" does not match the number of vectors");
    return h;
}

SemitoricPolygon polygon_from_json(std::string_view text) {
    json j = parse_json(text);
    check_format(j);
    SemitoricPolygon p;
    if (!j.contains("vertices") || !j["vertices"].is_array()) schema("missing \"vertices\" array");
    for (const auto& e : j["vertices"]) {
        if (!e.is_array() || e.size() != 2) schema("each vertex must be [x, y]");
        p.vertices.push_back({as_rational(e[0]), as_rational(e[1])});
    }
    if (j.contains("cuts")) {
        if (!j["cuts"].is_array()) schema("\"cuts\" must be an array");
        for (const auto& c : j["cuts"]) {
            if (!c.is_object() || !c.contains("lambda")) schema("each cut needs \"lambda\"");
            Cut cut;
            cut.lambda = as_rational(c["lambda"]);
            cut.eps = c.contains("eps") ? static_cast<int>(as_int(c["eps"])) : 1;
            p.cuts.push_back(cut);
        }
    }
    return p;
}

std::string to_json(const ToricFan& fan) {
    json j;
    j["format"] = 1;
    j["vectors"] = vectors_json(fan.vectors);
    return j.dump();
}

std::string to_json(const SemitoricHelix& h) {
    json j;
    j["format"] = 1;
    j["d"] = h.d();
    j["c"] = h.c;
    j["vectors"] = vectors_json(h.vectors);
    return j.dump();
}

std::string to_json(const SemitoricPolygon& p) {
    json j;
    j["format"] = 1;
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back({v.x.str(), v.y.str()});
    j["vertices"] = verts;
    json cuts = json::array();
    for (const auto& c : p.cuts) cuts.push_back({{"lambda", c.lambda.str()}, {"eps", c.eps}});
    j["cuts"] = cuts;
    return j.dump();
}

std::vector<Vec2> parse_vectors(std::string_view text) {
    std::vector<Int> nums;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            bool negative = ch == '-';
            if (ch == '-' || ch == '+') ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError(start, "expected digits");
            Int value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = add(mul(value, 10), text[i] - '0');
                ++i;
            }
            nums.push_back(negative ? -value : value);
        } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' ||
                   ch == '[' || ch == ']' || ch == ',') {
            ++i;
        } else {
            throw ParseError(i, std::string("unexpected character '") + ch + "'");
        }
    }
    if (nums.size() % 2 != 0) throw ParseError(text.size(), "odd number of coordinates");
    std::vector<Vec2> out;
    for (std::size_t k = 0; k < nums.size(); k += 2) out.push_back({nums[k], nums[k + 1]});
    return out;
}

Mat2 parse_matrix(std::string_view text) {
    auto v = parse_vectors(text);
    if (v.size() != 2) throw ParseError(0, "expected [[a,b],[c,d]]");
    return {v[0].x, v[0].y, v[1].x, v[1].y};
}

namespace {

struct Frame {
    double xmin, xmax, ymin, ymax;
    double scale = 40.0;
    double pad = 30.0;

    double width() const { return (xmax - xmin) * scale + 2 * pad; }
    double height() const { return (ymax - ymin) * scale + 2 * pad; }
    double px(double x) const { return pad + (x - xmin) * scale; }
    double py(double y) const { return pad + (ymax - y) * scale; }
};

Frame frame_for(const std::vector<std::pair<double, double>>& pts) {
    Frame f{0, 0, 0, 0};
    for (const auto& [x, y] : pts) {
        f.xmin = std::min(f.xmin, x);
        f.xmax = std::max(f.xmax, x);
        f.ymin = std::min(f.ymin, y);
        f.ymax = std::max(f.ymax, y);
    }
    f.xmin = std::floor(f.xmin) - 1;
    f.ymin = std::floor(f.ymin) - 1;
    f.xmax = std::ceil(f.xmax) + 1;
    f.ymax = std::ceil(f.ymax) + 1;
    double span = std::max(f.xmax - f.xmin, f.ymax - f.ymin);
    if (span > 20) f.scale = 800.0 / span;
    return f;
}

std::string header(const Frame& f) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width()
       << "\" height=\"" << f.height() << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
          "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
    for (double x = f.xmin; x <= f.xmax; x += 1)
        os << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(f.ymin) << "\" x2=\"" << f.px(x)
           << "\" y2=\"" << f.py(f.ymax) << "\" stroke=\"#eee\"/>\n";
    for (double y = f.ymin; y <= f.ymax; y += 1)
        os << "<line x1=\"" << f.px(f.xmin) << "\" y1=\"" << f.py(y) << "\" x2=\"" << f.px(f.xmax)
           << "\" y2=\"" << f.py(y) << "\" stroke=\"#eee\"/>\n";
    return os.str();
}

std::string arrows(const Frame& f, const std::vector<Vec2>& v, const std::string& color,
                   bool dashed, std::size_t label_from) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double x = static_cast<double>(v[i].x), y = static_cast<double>(v[i].y);
        os << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(x)
           << "\" y2=\"" << f.py(y) << "\" stroke=\"" << color << "\" stroke-width=\"2\""
           << (dashed ? " stroke-dasharray=\"4,3\"" : "") << " marker-end=\"url(#arrow)\"/>\n";
        os << "<text x=\"" << f.px(x) + 4 << "\" y=\"" << f.py(y) - 4
           << "\" font-size=\"12\" font-family=\"sans-serif\">v" << (label_from + i) << "</text>\n";
    }
    return os.str();
}

}  // namespace

std::string render_svg(const ToricFan& fan) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : fan.vectors) pts.emplace_back(v.x, v.y);
    Frame f = frame_for(pts);
    return header(f) + arrows(f, fan.vectors, "black", false, 0) + "</svg>\n";
}

std::string render_svg(const SemitoricHelix& h) {
    std::vector<Vec2> next{h.at(static_cast<Int>(h.d()))};
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : h.vectors) pts.emplace_back(v.x, v.y);
    pts.emplace_back(next[0].x, next[0].y);
    Frame f = frame_for(pts);
    std::ostringstream os;
    os << header(f) << arrows(f, h.vectors, "black", false, 0)
       << arrows(f, next, "gray", true, h.d())
       << "<text x=\"8\" y=\"16\" font-size=\"14\" font-family=\"sans-serif\">c = " << h.c
       << ", d = " << h.d() << "</text>\n</svg>\n";
    return os.str();
}

std::string render_svg(const SemitoricPolygon& p) {
    PolygonAnalysis a = polygon_analyze(p);
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : a.vertices) pts.emplace_back(v.x.to_double(), v.y.to_double());
    Frame f = frame_for(pts);
    std::ostringstream os;
    os << header(f) << "<polygon points=\"";
    for (const auto& [x, y] : pts) os << f.px(x) << "," << f.py(y) << " ";
    os << "\" fill=\"#dde8f5\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double x = f.px(pts[i].first), y = f.py(pts[i].second);
        if (a.corners[i].kind == CornerKind::Fake) {
            const Cut& cut = p.cuts[*a.corners[i].cut];
            double y2 = cut.eps == 1 ? f.py(f.ymin) : f.py(f.ymax);
            os << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x << "\" y2=\"" << y2
               << "\" stroke=\"red\" stroke-dasharray=\"5,4\"/>\n";
            os << "<path d=\"M" << x - 5 << "," << y - 5 << " L" << x + 5 << "," << y + 5 << " M"
               << x - 5 << "," << y + 5 << " L" << x + 5 << "," << y - 5
               << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
        } else {
            os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"black\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace semitoric
