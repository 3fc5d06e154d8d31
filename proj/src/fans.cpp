#include "semitoric/fans.hpp"

#include "semitoric/cyclic.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/winding.hpp"

#include <map>
#include <set>

namespace semitoric {

void fan_validate(const ToricFan& fan) {
    const auto& v = fan.vectors;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_primitive(v[i])) throw DomainError(ErrorKind::NotPrimitive, to_string(v[i]), i);
    if (v.size() < 3) throw DomainError(ErrorKind::TooShort, "a fan needs at least 3 vectors");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (det(v[i], v[(i + 1) % v.size()]) != 1)
            throw DomainError(ErrorKind::BadDeterminant, {}, i);
    if (path_winding(v, true).turns() != 1)
        throw DomainError(ErrorKind::NotCounterClockwise, "fan does not wind once");
}

std::vector<Int> fan_integers(const ToricFan& fan) {
    const auto& v = fan.vectors;
    std::size_t d = v.size();
    std::vector<Int> a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = det(v[i], v[(i + 2) % d]);
    return a;
}

ToricFan fan_blowup(const ToricFan& fan, std::size_t i) {
    std::size_t d = fan.vectors.size();
    if (i >= d) throw DomainError(ErrorKind::IndexOutOfRange, {}, i);
    ToricFan out = fan;
    Vec2 w = fan.vectors[i] + fan.vectors[(i + 1) % d];
    out.vectors.insert(out.vectors.begin() + static_cast<std::ptrdiff_t>(i + 1), w);
    return out;
}

ToricFan fan_blowdown(const ToricFan& fan, std::size_t i) {
    const auto& v = fan.vectors;
    std::size_t d = v.size();
    if (i >= d) throw DomainError(ErrorKind::IndexOutOfRange, {}, i);
    if (v[i] != v[(i + d - 1) % d] + v[(i + 1) % d])
        throw DomainError(ErrorKind::NotBlowdownSite, {}, i);
    if (d - 1 < 3) throw DomainError(ErrorKind::MinimumLength, {}, i);
    ToricFan out = fan;
    out.vectors.erase(out.vectors.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

static std::optional<std::size_t> first_site(const ToricFan& fan) {
    const auto& v = fan.vectors;
    std::size_t d = v.size();
    if (d <= 3) return std::nullopt;
    for (std::size_t i = 0; i < d; ++i)
        if (v[i] == v[(i + d - 1) % d] + v[(i + 1) % d]) return i;
    return std::nullopt;
}

bool fan_is_minimal(const ToricFan& fan) { return !first_site(fan).has_value(); }

FanMinimizeResult fan_minimize(const ToricFan& fan) {
    fan_validate(fan);
    FanMinimizeResult r{fan, {}};
    while (auto i = first_site(r.fan)) {
        r.fan = fan_blowdown(r.fan, *i);
        r.blowdowns.push_back(*i);
    }
    return r;
}

std::string FanClass::render() const {
    switch (kind) {
    case Kind::CP2: return "CP2";
    case Kind::Square: return "Square";
    case Kind::Hirzebruch: return "Hirzebruch(" + std::to_string(k) + ")";
    }
    return "?";
}

FanClass fan_classify_minimal(const ToricFan& fan) {
    fan_validate(fan);
    if (!fan_is_minimal(fan)) throw DomainError(ErrorKind::NotMinimal);
    const auto& v = fan.vectors;
    std::size_t d = v.size();
    for (std::size_t r = 0; r < d; ++r) {
        Mat2 inv = inverse(Mat2::from_columns(v[r], v[(r + 1) % d]));
        std::vector<Vec2> u(d);
        for (std::size_t i = 0; i < d; ++i) u[i] = inv * v[(r + i) % d];
        if (d == 3 && u[2] == Vec2{-1, -1}) return {FanClass::Kind::CP2, 0};
        if (d == 4 && u[2].x == -1 && u[3] == Vec2{0, -1}) {
            if (u[2].y == 0) return {FanClass::Kind::Square, 0};
            return {FanClass::Kind::Hirzebruch, u[2].y};
        }
    }
    throw DomainError(ErrorKind::NotClassifiable, "minimal fan matches no model");
}

FanClass normalized(FanClass cls) {
    if (cls.kind == FanClass::Kind::Hirzebruch && cls.k < 0) cls.k = neg(cls.k);
    return cls;
}

std::vector<FanClass> fan_reachable_minimal(const ToricFan& fan) {
    fan_validate(fan);
    if (fan.vectors.size() > 10)
        throw DomainError(ErrorKind::InvalidInput, "exhaustive search limited to length 10");
    std::set<FanClass> found;
    std::set<std::vector<Int>> seen;
    std::vector<ToricFan> stack{fan};
    while (!stack.empty()) {
        ToricFan cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(least_rotation(fan_integers(cur))).second) continue;
        bool any = false;
        std::size_t d = cur.vectors.size();
        if (d > 3) {
            for (std::size_t i = 0; i < d; ++i) {
                const auto& v = cur.vectors;
                if (v[i] == v[(i + d - 1) % d] + v[(i + 1) % d]) {
                    any = true;
                    stack.push_back(fan_blowdown(cur, i));
                }
            }
        }
        if (!any) found.insert(normalized(fan_classify_minimal(cur)));
    }
    return {found.begin(), found.end()};
}

ToricFan fan_model(const FanClass& cls) {
    switch (cls.kind) {
    case FanClass::Kind::CP2: return {{{1, 0}, {0, 1}, {-1, -1}}};
    case FanClass::Kind::Square: return {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    case FanClass::Kind::Hirzebruch: return {{{1, 0}, {0, 1}, {-1, cls.k}, {0, -1}}};
    }
    return {};
}

}  // namespace semitoric
