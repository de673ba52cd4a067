#include "tangnet/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <vector>

namespace tangnet {

namespace {

std::string fmt(const char* pattern, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), pattern, value);
    return buffer;
}

std::string angle_label(double deg) {
    // shave float dust so labels stay stable
    const double rounded = std::round(deg * 1e6) / 1e6;
    return fmt("%g", rounded);
}

std::string node_id(const Party& party, std::size_t index) {
    return party.label + ":" + std::to_string(index);
}

std::string branch_label(const Branch& b) {
    return "len=" + fmt("%.4f", b.length) + ", ang=" + angle_label(b.orientation_deg) +
           "\xC2\xB0"; // degree sign
}

// ---- structure diagrams ----------------------------------------------------

DiagramDoc structure_dot(const QuantumStructure& qs) {
    DiagramDoc doc;
    doc.format = DiagramFormat::Dot;
    std::string& out = doc.body;
    out += "graph structure {\n";

    // occupied nodes in (party, basis index) order
    std::set<std::pair<std::size_t, std::size_t>> occupied;
    for (const Branch& b : qs.branches()) {
        for (std::size_t p = 0; p < qs.parties().size(); ++p) {
            occupied.insert({p, b.nodes[p]});
        }
    }
    for (const auto& [p, idx] : occupied) {
        const Party& party = qs.parties()[p];
        out += "  \"" + node_id(party, idx) + "\" [shape=circle";
        if (p % 2 == 0) {
            out += ", style=filled, fillcolor=black, fontcolor=white";
        }
        out += ", label=\"" + party.label + "|" + std::to_string(idx) + ">\"];\n";
    }

    for (std::size_t k = 0; k < qs.branches().size(); ++k) {
        const Branch& b = qs.branches()[k];
        const std::string base_id = "branch" + std::to_string(k);
        doc.edge_ids[k] = base_id;
        for (std::size_t p = 0; p + 1 < qs.parties().size(); ++p) {
            const std::string id =
                (p == 0) ? base_id : base_id + "_" + std::to_string(p);
            out += "  \"" + node_id(qs.parties()[p], b.nodes[p]) + "\" -- \"" +
                   node_id(qs.parties()[p + 1], b.nodes[p + 1]) + "\" [id=\"" + id +
                   "\", len=" + fmt("%.4f", 2.0 * b.length);
            if (p == 0) {
                out += ", label=\"" + branch_label(b) + "\"";
            }
            out += "];\n";
        }
    }
    out += "}\n";
    return doc;
}

DiagramDoc structure_svg(const QuantumStructure& qs) {
    DiagramDoc doc;
    doc.format = DiagramFormat::Svg;

    constexpr double kUnit = 200.0; // pixels per unit branch length
    constexpr double kMarginX = 40.0;
    constexpr double kTop = 240.0;
    constexpr double kRow = 56.0;
    const std::size_t segments = qs.parties().size() - 1;
    const double width = kMarginX * 2 + kUnit * std::max<std::size_t>(segments, 1) + 240.0;
    const double height = kTop + kRow * static_cast<double>(qs.branches().size()) + 20.0;

    std::string& out = doc.body;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt("%.0f", width) + "\" height=\"" + fmt("%.0f", height) + "\">\n";

    for (std::size_t k = 0; k < qs.branches().size(); ++k) {
        const Branch& b = qs.branches()[k];
        const double theta = b.orientation_deg * std::numbers::pi / 180.0;
        const double dx = kUnit * b.length * std::cos(theta);
        const double dy = -kUnit * b.length * std::sin(theta); // svg y is down
        double x = kMarginX;
        double y = kTop + kRow * static_cast<double>(k);

        const std::string id = "branch" + std::to_string(k);
        doc.edge_ids[k] = id;
        for (std::size_t p = 0; p < qs.parties().size(); ++p) {
            if (p + 1 < qs.parties().size()) {
                const std::string seg_id =
                    (p == 0) ? id : id + "_" + std::to_string(p);
                out += "  <line id=\"" + seg_id + "\" x1=\"" + fmt("%.2f", x) +
                       "\" y1=\"" + fmt("%.2f", y) + "\" x2=\"" + fmt("%.2f", x + dx) +
                       "\" y2=\"" + fmt("%.2f", y + dy) +
                       "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            }
            // node glyph: filled for even parties, open for odd
            out += "  <circle cx=\"" + fmt("%.2f", x) + "\" cy=\"" + fmt("%.2f", y) +
                   "\" r=\"5\"";
            if (p % 2 == 0) {
                out += " fill=\"black\"";
            } else {
                out += " fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
            }
            out += "/>\n";
            out += "  <text x=\"" + fmt("%.2f", x + 8.0) + "\" y=\"" +
                   fmt("%.2f", y + 14.0) + "\" font-size=\"11\">" +
                   qs.parties()[p].label + "|" + std::to_string(b.nodes[p]) +
                   "&gt;</text>\n";
            x += dx;
            y += dy;
        }
        out += "  <text x=\"" + fmt("%.2f", kMarginX) + "\" y=\"" +
               fmt("%.2f", kTop + kRow * static_cast<double>(k) + 30.0) +
               "\" font-size=\"11\">" + branch_label(b) + "</text>\n";
    }
    out += "</svg>\n";
    return doc;
}

// ---- partition diagrams -----------------------------------------------------

struct BoxNode {
    std::string title;
    std::vector<std::string> parties;
    std::vector<BoxNode> children;
};

BoxNode role_box(const PartitionModel& model, Role role) {
    BoxNode box;
    box.title = role_name(role);
    box.parties = model.parties_with_role(role);
    std::sort(box.parties.begin(), box.parties.end());
    return box;
}

BoxNode partition_tree(const PartitionModel& model) {
    BoxNode universe;
    universe.title = "U";
    switch (model.kind()) {
        case PartitionKind::ModelA:
            universe.children.push_back(role_box(model, Role::S));
            universe.children.push_back(role_box(model, Role::E0));
            break;
        case PartitionKind::ModelB: {
            BoxNode e0 = role_box(model, Role::E0);
            BoxNode e1 = role_box(model, Role::E1);
            e1.children.push_back(role_box(model, Role::S));
            e0.children.push_back(std::move(e1));
            universe.children.push_back(std::move(e0));
            break;
        }
        case PartitionKind::ModelC: {
            BoxNode w1;
            w1.title = "W1";
            w1.children.push_back(role_box(model, Role::S1));
            w1.children.push_back(role_box(model, Role::E1));
            BoxNode w2;
            w2.title = "W2";
            w2.children.push_back(role_box(model, Role::S2));
            w2.children.push_back(role_box(model, Role::E2));
            universe.children.push_back(std::move(w1));
            universe.children.push_back(std::move(w2));
            if (!model.parties_with_role(Role::E0).empty()) {
                universe.children.push_back(role_box(model, Role::E0));
            }
            break;
        }
        case PartitionKind::Custom:
            for (Role role : {Role::S, Role::S1, Role::S2, Role::E0, Role::E1,
                              Role::E2}) {
                if (!model.parties_with_role(role).empty()) {
                    universe.children.push_back(role_box(model, role));
                }
            }
            break;
    }
    return universe;
}

void dot_box(const BoxNode& box, std::string& out, std::string indent, int& counter) {
    out += indent + "subgraph cluster_" + std::to_string(counter++) + " {\n";
    out += indent + "  label=\"" + box.title + "\";\n";
    if (box.parties.empty() && box.children.empty()) {
        out += indent + "  \"" + box.title + "_anchor\" [style=invis, label=\"\"];\n";
    }
    for (const std::string& party : box.parties) {
        out += indent + "  \"" + party + "\" [shape=box];\n";
    }
    for (const BoxNode& child : box.children) {
        dot_box(child, out, indent + "  ", counter);
    }
    out += indent + "}\n";
}

struct BoxGeometry {
    double width = 0.0;
    double height = 0.0;
};

constexpr double kBoxPad = 16.0;
constexpr double kTitleRow = 20.0;
constexpr double kPartyRow = 18.0;

BoxGeometry measure(const BoxNode& box) {
    BoxGeometry g;
    double child_w = 0.0;
    double child_h = 0.0;
    for (const BoxNode& child : box.children) {
        const BoxGeometry cg = measure(child);
        child_w += cg.width + (child_w > 0.0 ? kBoxPad : 0.0);
        child_h = std::max(child_h, cg.height);
    }
    double party_w = 0.0;
    for (const std::string& p : box.parties) {
        party_w += static_cast<double>(p.size()) * 8.0 + 10.0;
    }
    const double party_h = box.parties.empty() ? 0.0 : kPartyRow;
    g.width = std::max({child_w, party_w, 9.0 * box.title.size() + 20.0}) +
              2 * kBoxPad;
    g.height = kTitleRow + party_h + child_h + 2 * kBoxPad;
    return g;
}

void svg_box(const BoxNode& box, double x, double y, std::string& out) {
    const BoxGeometry g = measure(box);
    const double x2 = x + g.width;
    const double y2 = y + g.height;
    const auto line = [&](double ax, double ay, double bx, double by) {
        out += "  <line x1=\"" + fmt("%.1f", ax) + "\" y1=\"" + fmt("%.1f", ay) +
               "\" x2=\"" + fmt("%.1f", bx) + "\" y2=\"" + fmt("%.1f", by) +
               "\" stroke=\"black\"/>\n";
    };
    line(x, y, x2, y);
    line(x2, y, x2, y2);
    line(x2, y2, x, y2);
    line(x, y2, x, y);
    out += "  <text x=\"" + fmt("%.1f", x + 6.0) + "\" y=\"" + fmt("%.1f", y + 15.0) +
           "\" font-size=\"12\">" + box.title + "</text>\n";

    double cursor_y = y + kTitleRow;
    if (!box.parties.empty()) {
        std::string joined;
        for (const std::string& p : box.parties) {
            if (!joined.empty()) joined += ", ";
            joined += p;
        }
        out += "  <text x=\"" + fmt("%.1f", x + kBoxPad) + "\" y=\"" +
               fmt("%.1f", cursor_y + 13.0) + "\" font-size=\"11\">" + joined +
               "</text>\n";
        cursor_y += kPartyRow;
    }
    double cursor_x = x + kBoxPad;
    for (const BoxNode& child : box.children) {
        svg_box(child, cursor_x, cursor_y + kBoxPad * 0.5, out);
        cursor_x += measure(child).width + kBoxPad;
    }
}

DiagramDoc partition_dot(const PartitionModel& model) {
    DiagramDoc doc;
    doc.format = DiagramFormat::Dot;
    doc.body += "graph partition {\n";
    int counter = 0;
    dot_box(partition_tree(model), doc.body, "  ", counter);
    doc.body += "}\n";
    return doc;
}

DiagramDoc partition_svg(const PartitionModel& model) {
    DiagramDoc doc;
    doc.format = DiagramFormat::Svg;
    const BoxNode tree = partition_tree(model);
    const BoxGeometry g = measure(tree);
    doc.body += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                fmt("%.0f", g.width + 20.0) + "\" height=\"" +
                fmt("%.0f", g.height + 20.0) + "\">\n";
    svg_box(tree, 10.0, 10.0, doc.body);
    doc.body += "</svg>\n";
    return doc;
}

// ---- validation -------------------------------------------------------------

void validate_dot(const std::string& body) {
    int depth = 0;
    std::set<std::string> declared;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t eol = body.find('\n', pos);
        if (eol == std::string::npos) eol = body.size();
        std::string line = body.substr(pos, eol - pos);
        pos = eol + 1;

        for (char c : line) {
            if (c == '{') ++depth;
            if (c == '}') --depth;
            if (depth < 0) throw StructureError("dot: unbalanced braces");
        }
        const std::size_t q0 = line.find('"');
        if (q0 == std::string::npos) continue;
        const std::size_t q1 = line.find('"', q0 + 1);
        if (q1 == std::string::npos) {
            throw StructureError("dot: unterminated quoted id");
        }
        const std::string first = line.substr(q0 + 1, q1 - q0 - 1);
        const std::size_t dash = line.find("--", q1);
        if (dash != std::string::npos) {
            const std::size_t q2 = line.find('"', dash);
            const std::size_t q3 =
                (q2 == std::string::npos) ? std::string::npos : line.find('"', q2 + 1);
            if (q3 == std::string::npos) {
                throw StructureError("dot: malformed edge line");
            }
            const std::string second = line.substr(q2 + 1, q3 - q2 - 1);
            if (!declared.count(first) || !declared.count(second)) {
                throw StructureError("dot: edge references undeclared node");
            }
        } else if (line.find("label=") == std::string::npos ||
                   line.find('[') != std::string::npos) {
            declared.insert(first);
        }
    }
    if (depth != 0) throw StructureError("dot: unbalanced braces");
}

void validate_svg(const std::string& body) {
    static const std::set<std::string> allowed = {"svg", "line", "circle", "text"};
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = body.find('<', pos)) != std::string::npos) {
        const std::size_t end = body.find('>', pos);
        if (end == std::string::npos) {
            throw StructureError("svg: unterminated tag");
        }
        std::string tag = body.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        const bool closing = !tag.empty() && tag.front() == '/';
        const bool self_closing = !tag.empty() && tag.back() == '/';
        if (closing) tag.erase(0, 1);
        if (self_closing) tag.pop_back();
        std::string name = tag.substr(0, tag.find_first_of(" \t"));
        if (!allowed.count(name)) {
            throw StructureError("svg: element '" + name + "' not in the subset");
        }
        if (closing) {
            if (stack.empty() || stack.back() != name) {
                throw StructureError("svg: mismatched </" + name + ">");
            }
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
    }
    if (!stack.empty()) {
        throw StructureError("svg: unclosed <" + stack.back() + ">");
    }
}

} // namespace

DiagramFormat diagram_format_from_name(const std::string& name) {
    if (name == "dot") return DiagramFormat::Dot;
    if (name == "svg") return DiagramFormat::Svg;
    throw ArgumentError("unknown diagram format '" + name + "'");
}

DiagramDoc emit_structure_diagram(const QuantumStructure& qs, DiagramFormat format) {
    return format == DiagramFormat::Dot ? structure_dot(qs) : structure_svg(qs);
}

DiagramDoc emit_partition_diagram(const PartitionModel& model, DiagramFormat format) {
    return format == DiagramFormat::Dot ? partition_dot(model) : partition_svg(model);
}

void validate_diagram(const DiagramDoc& doc) {
    if (doc.format == DiagramFormat::Dot) {
        validate_dot(doc.body);
    } else {
        validate_svg(doc.body);
    }
}

} // namespace tangnet
