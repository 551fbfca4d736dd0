// Copyright 2026 The deltastab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace deltastab::cli {

namespace {

constexpr double kCenter = 120.0;
constexpr double kRadius = 90.0;
constexpr double kLabelRadius = 106.0;

struct Point {
    double x;
    double y;
};

// SVG y grows downward, so increasing angle runs clockwise on screen.
Point on_circle(Label k, int num_labels, double radius) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * (k - 1) / num_labels;
    return {kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const PairPartition &p) {
    const int n = p.num_labels();
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" viewBox=\"0 0 240 240\">\n";
    svg << "  <circle cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\"" << fmt(kRadius)
        << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n";
    for (const auto &c : p.chords()) {
        const Point a = on_circle(c.a, n, kRadius);
        const Point b = on_circle(c.b, n, kRadius);
        svg << "  <line class=\"chord\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
            << "\" y2=\"" << fmt(b.y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (Label k = 1; k <= n; ++k) {
        const Point dot = on_circle(k, n, kRadius);
        const Point label = on_circle(k, n, kLabelRadius);
        svg << "  <circle cx=\"" << fmt(dot.x) << "\" cy=\"" << fmt(dot.y) << "\" r=\"4\" fill=\"black\"/>\n";
        svg << "  <text x=\"" << fmt(label.x) << "\" y=\"" << fmt(label.y)
            << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << k << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_ascii(const PairPartition &p) {
    std::ostringstream out;
    auto chords = p.chords();
    int crossings = 0;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        out << chords[i].a << '-' << chords[i].b;
        bool first = true;
        for (std::size_t j = 0; j < chords.size(); ++j) {
            if (i == j || !chords_cross(chords[i], chords[j])) continue;
            out << (first ? "  crosses " : " ") << chords[j].a << '-' << chords[j].b;
            first = false;
            if (j > i) ++crossings;
        }
        out << '\n';
    }
    if (crossings == 0) {
        out << "no crossings\n";
    } else {
        out << crossings << (crossings == 1 ? " crossing\n" : " crossings\n");
    }
    return out.str();
}

}  // namespace deltastab::cli
