// Regenerates src/construct/psi_tables.cpp: exhaustive Psi-cover searches on
// the small gadgets, printed as C++ initializers.
#include <iostream>
#include <string>
#include <vector>

#include "sigcover/construct.hpp"

using namespace sigcover;

namespace {

struct Request {
    std::string key;
    Orientation o;
    int t;
    PsiShape shape;
    bool required;
};

const char* role_enum(Role r) {
    switch (r) {
        case Role::signed_circuit: return "Role::signed_circuit";
        case Role::positive_path: return "Role::positive_path";
        case Role::negative_path: return "Role::negative_path";
        case Role::tadpole_at_x: return "Role::tadpole_at_x";
        case Role::tadpole_at_y: return "Role::tadpole_at_y";
    }
    return "?";
}

}  // namespace

int main() {
    std::vector<Request> reqs;
    for (int t = 0; t <= 3; ++t) reqs.push_back({"R2", Orientation::yx, t, PsiShape::plain, true});
    reqs.push_back({"R2", Orientation::xy, 2, PsiShape::one_y_avoids_x, true});
    reqs.push_back({"R3", Orientation::xy, 2, PsiShape::star, true});
    reqs.push_back({"R4", Orientation::xy, 2, PsiShape::split_y, true});
    reqs.push_back({"R5", Orientation::xy, 2, PsiShape::split_y, true});
    for (const char* k : {"R2+z", "R4+z", "R5+z"}) reqs.push_back({k, Orientation::xy, 2, PsiShape::star, true});
    for (const char* k : {"R1", "R2", "R3", "R4", "R5"})
        for (auto o : {Orientation::xy, Orientation::yx}) {
            reqs.push_back({k, o, 2, PsiShape::clean, false});
            for (int t = 0; t <= 3; ++t) reqs.push_back({k, o, t, PsiShape::x_avoids_y, false});
        }

    std::cout << "// Generated by tablegen. Do not edit by hand.\n"
              << "#include \"sigcover/construct.hpp\"\n\n"
              << "namespace sigcover {\n\n"
              << "const std::vector<TableEntry>& table_entries() {\n"
              << "    static const std::vector<TableEntry> entries = {\n";
    int missing = 0;
    for (const auto& r : reqs) {
        auto tg = table_graph(r.key);
        VertexId x = tg.x, y = tg.y;
        if (r.o == Orientation::yx) std::swap(x, y);
        auto p = find_psi_cover(tg.graph, x, y, search_options(r.shape, r.t));
        if (p && !has_shape(tg.graph, *p, r.shape)) p.reset();
        const char* o = r.o == Orientation::xy ? "Orientation::xy" : "Orientation::yx";
        if (!p) {
            std::cout << "        // none: " << r.key << ' ' << o << " t=" << r.t << ' ' << shape_name(r.shape) << '\n';
            if (r.required) {
                std::cerr << "required entry not found: " << r.key << " t=" << r.t << ' ' << shape_name(r.shape) << '\n';
                ++missing;
            }
            continue;
        }
        std::cout << "        {\"" << r.key << "\", " << o << ", " << r.t << ", PsiShape::" << shape_name(r.shape)
                  << ",\n         {";
        bool first = true;
        for (const auto& m : p->family().members) {
            std::cout << (first ? "" : ",\n          ") << '{' << role_enum(m.role) << ", {";
            for (std::size_t i = 0; i < m.edges.size(); ++i) std::cout << (i ? ", " : "") << m.edges[i];
            std::cout << "}}";
            first = false;
        }
        std::cout << "}},\n";
    }
    std::cout << "    };\n    return entries;\n}\n\n}  // namespace sigcover\n";
    return missing ? 1 : 0;
}
