#include "posetdim/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace posetdim {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Realizer read_realizer(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0, d = 0;
    bool have_header = false;
    Realizer r;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string tag;
            if (!(fields >> tag >> n >> d) || tag != "r")
                throw ParseError(lineno, "expected header `r <n> <d>`");
            have_header = true;
            continue;
        }
        LinearExtension ext;
        long long x = 0;
        while (fields >> x) {
            if (x < 0 || static_cast<std::size_t>(x) >= n) throw ParseError(lineno, "element out of range");
            ext.order.push_back(static_cast<Element>(x));
        }
        if (!fields.eof()) throw ParseError(lineno, "bad element id");
        if (ext.order.size() != n) throw ParseError(lineno, "extension has wrong length");
        std::vector<bool> seen(n, false);
        for (Element e : ext.order) {
            if (seen[e]) throw ParseError(lineno, "extension repeats an element");
            seen[e] = true;
        }
        r.extensions.push_back(std::move(ext));
    }
    if (!have_header) throw ParseError(lineno, "missing header `r <n> <d>`");
    if (r.extensions.size() != d) throw ParseError(lineno, "header announces " + std::to_string(d) + " extensions");
    return r;
}

void write_realizer(std::ostream& out, const Realizer& realizer, std::size_t n) {
    out << "r " << n << ' ' << realizer.size() << '\n';
    for (const auto& ext : realizer.extensions) {
        for (std::size_t i = 0; i < ext.order.size(); ++i) out << (i ? " " : "") << ext.order[i];
        out << '\n';
    }
}

nlohmann::ordered_json report_to_json(const ConstructionReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["h"] = r.h;
    j["t"] = r.t;
    j["p"] = r.p;
    j["phi_bound"] = r.phi_bound;
    j["tau_class_count"] = r.tau_class_count;
    j["d_used"] = r.d_used;
    if (std::isfinite(r.bound_log2))
        j["bound_log2"] = r.bound_log2;
    else
        j["bound_log2"] = nullptr;
    j["phi_bound_ok"] = r.phi_bound_ok;
    j["signature_bound_ok"] = r.signature_bound_ok;
    j["classes_reversible"] = r.classes_reversible;
    j["verified"] = r.verified;
    j["class_sizes"] = r.class_sizes;
    return j;
}

void write_report_text(std::ostream& out, const ConstructionReport& r) {
    out << "elements            " << r.n << '\n'
        << "height h            " << r.h << '\n'
        << "width t             " << r.t << '\n'
        << "phi colours p       " << r.p << " (bound " << r.phi_bound << ")\n"
        << "tau colours         " << r.tau_class_count << '\n'
        << "extensions d_used   " << r.d_used << '\n'
        << "log2 bound          ";
    if (std::isfinite(r.bound_log2))
        out << r.bound_log2 << '\n';
    else
        out << "overflow\n";
    out << "classes reversible  " << (r.classes_reversible ? "yes" : "no") << '\n'
        << "verified            " << (r.verified ? "yes" : "no") << '\n';
}

Poset load_poset(const std::string& path) {
    auto in = open_input(path);
    return read_poset(in);
}

Graph load_graph_gr(const std::string& path) {
    auto in = open_input(path);
    return read_graph_gr(in);
}

TreeDecomposition load_td(const std::string& path) {
    auto in = open_input(path);
    return read_td(in);
}

}  // namespace posetdim
