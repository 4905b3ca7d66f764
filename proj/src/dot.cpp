/*
 * Copyright 2026 The rabinchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>

#include "rabinchain/instances.hpp"

namespace rc {
namespace {

std::string
escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string
index_list(std::uint64_t mask)
{
    std::string s;
    for (int i = 0; i < 64; i++) {
        if (!(mask >> i & 1)) continue;
        if (!s.empty()) s += ',';
        s += std::to_string(i + 1);
    }
    return s;
}

} // namespace

std::string
export_dot(const Arena &arena, const Objective &objective, int highlight_pair)
{
    std::ostringstream out;
    out << "digraph game {\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (int v = 0; v < arena.vertex_count(); v++) {
        std::string label = escape(arena.name(v));
        std::string fill;
        if (const auto *r = std::get_if<RabinObjective>(&objective)) {
            const auto g = r->good_mask(v), b = r->bad_mask(v);
            if (g) label += "\\nG:" + index_list(g);
            if (b) label += "\\nB:" + index_list(b);
            const bool in_g = g >> highlight_pair & 1, in_b = b >> highlight_pair & 1;
            if (in_g && in_b)
                fill = "palegreen:lightblue";
            else if (in_g)
                fill = "palegreen";
            else if (in_b)
                fill = "lightblue";
        } else if (const auto *p = std::get_if<ParityObjective>(&objective)) {
            label += "\\n" + std::to_string(p->colour(v));
        } else if (const auto *gp = std::get_if<GenParityObjective>(&objective)) {
            label += "\\n(";
            for (int t = 0; t < gp->dimension(); t++) label += (t ? "," : "") + std::to_string(gp->colour(v, t));
            label += ")";
        } else {
            const auto &m = std::get<MullerObjective>(objective);
            label += "\\n{" + index_list(m.colours(v)) + "}";
        }
        out << "  v" << v << " [label=\"" << label << "\", shape="
            << (arena.owner(v) == Player::steven ? "box" : "ellipse");
        if (v == arena.initial()) out << ", peripheries=2";
        if (!fill.empty())
            out << ", style=" << (fill.find(':') != std::string::npos ? "wedged" : "filled") << ", fillcolor=\"" << fill
                << "\"";
        out << "];\n";
    }
    for (auto [u, v] : arena.edges()) out << "  v" << u << " -> v" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace rc
