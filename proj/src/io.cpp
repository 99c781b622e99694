#include "dicube/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "dicube/errors.hpp"

namespace dicube {

using ojson = nlohmann::ordered_json;

std::string complex_to_json(const PrecubicalComplex& k) {
    ojson j;
    j["dims"] = k.counts();
    j["faces"] = ojson::array();
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int eps = 0; eps <= 1; ++eps) {
                    j["faces"].push_back({{"dim", d}, {"cell", c}, {"i", i}, {"eps", eps}, {"to", k.face(d, c, i, eps)}});
                }
            }
        }
    }
    if (k.base()) {
        j["base"] = {{"init", k.base()->initial}, {"final", k.base()->final}};
    } else {
        j["base"] = nullptr;
    }
    return j.dump();
}

PrecubicalComplex complex_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        auto counts = j.at("dims").get<std::vector<std::size_t>>();
        PrecubicalComplex k(counts);
        for (const auto& f : j.at("faces")) {
            const int d = f.at("dim").get<int>();
            const int i = f.at("i").get<int>();
            const int eps = f.at("eps").get<int>();
            const auto cell = f.at("cell").get<std::size_t>();
            const auto to = f.at("to").get<std::size_t>();
            if (d < 1 || d >= static_cast<int>(counts.size()) || cell >= counts[d] || i < 1 || i > d ||
                (eps != 0 && eps != 1) || to >= counts[d - 1]) {
                throw StructuralError("face entry out of range: " + f.dump());
            }
            k.set_face(d, cell, i, eps, to);
        }
        if (j.contains("base") && !j["base"].is_null()) {
            BasePoints b{j["base"].at("init").get<std::size_t>(), j["base"].at("final").get<std::size_t>()};
            if (counts.empty() || b.initial >= counts[0] || b.final >= counts[0]) {
                throw StructuralError("base points must be vertices");
            }
            k.set_base(b);
        }
        validate_complex(k); // throws on missing entries
        return k;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("complex JSON: ") + e.what());
    }
}

std::string complex_to_dot(const PrecubicalComplex& k, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (int d = 0; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            os << "  c" << d << "_" << c << " [label=\"" << k.name(d, c) << "\"];\n";
        }
    }
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int eps = 0; eps <= 1; ++eps) {
                    os << "  c" << d << "_" << c << " -> c" << d - 1 << "_" << k.face(d, c, i, eps) << " [label=\"d^"
                       << eps << "_" << i << "\"];\n";
                }
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string order_to_json(const DoubleOrder& o) {
    ojson j;
    j["x"] = o.x.matrix();
    j["y"] = o.y.matrix();
    j["labels"] = ojson::array();
    for (int a = 0; a < o.size(); ++a) j["labels"].push_back(element_name(a));
    return j.dump();
}

DoubleOrder order_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        auto x = j.at("x").get<std::vector<std::vector<bool>>>();
        auto y = j.at("y").get<std::vector<std::vector<bool>>>();
        if (x.size() != y.size()) throw StructuralError("x and y matrices differ in size");
        return DoubleOrder(Relation::from_matrix(x), Relation::from_matrix(y));
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("order JSON: ") + e.what());
    }
}

std::string homology_to_json(const std::vector<HomologyGroup>& h) {
    ojson j = ojson::array();
    for (std::size_t k = 0; k < h.size(); ++k) {
        ojson t = ojson::array();
        for (const auto& d : h[k].torsion) {
            if (d.fits_slong_p()) {
                t.push_back(d.get_si());
            } else {
                t.push_back(d.get_str());
            }
        }
        j.push_back({{"dim", k}, {"betti", h[k].betti}, {"torsion", t}});
    }
    return j.dump();
}

std::string chains_to_json(const std::vector<CubeChain>& chains, const PrecubicalComplex& k) {
    ojson j = ojson::array();
    for (const auto& c : chains) {
        ojson row = ojson::array();
        for (const auto& cell : c.cells) row.push_back(k.name(cell.dim, cell.index));
        j.push_back(row);
    }
    return j.dump();
}

} // namespace dicube
