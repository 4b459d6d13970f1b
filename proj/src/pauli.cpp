#include "f2gauge/pauli.hpp"

#include <sstream>

namespace f2g {

PauliVec PauliVec::single(std::size_t n, std::size_t qubit, char type) {
    PauliVec p(n);
    switch (type) {
        case 'x':
        case 'X':
            p.x.set(qubit, true);
            break;
        case 'z':
        case 'Z':
            p.z.set(qubit, true);
            break;
        case 'y':
        case 'Y':
            p.x.set(qubit, true);
            p.z.set(qubit, true);
            break;
        default:
            throw std::invalid_argument("PauliVec::single: bad type");
    }
    return p;
}

std::vector<std::size_t> support(const PauliVec& f) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < f.n; ++i)
        if (f.x.get(i) || f.z.get(i)) s.push_back(i);
    return s;
}

std::size_t weight(const PauliVec& f) { return support(f).size(); }

CssType css_type(const PauliVec& f) {
    bool hx = f.x.any(), hz = f.z.any();
    if (!hx && !hz) return CssType::Identity;
    if (hx && !hz) return CssType::X;
    if (!hx && hz) return CssType::Z;
    return CssType::Mixed;
}

CoordGroups qubit_groups(std::size_t n) {
    CoordGroups g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = {i, n + i};
    return g;
}

std::string render(const PauliVec& f, const std::vector<QubitLabel>& labels) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < f.n; ++i) {
        bool hx = f.x.get(i), hz = f.z.get(i);
        if (!hx && !hz) continue;
        if (!first) out << ' ';
        first = false;
        out << (hx && hz ? "Y" : hx ? "X" : "Z") << '(';
        const QubitLabel& l = labels[i];
        for (std::size_t k = 0; k < l.cell.size(); ++k) {
            if (k) out << ',';
            out << l.cell[k];
        }
        out << ';' << l.slot << ')';
    }
    if (first) return "id";
    return out.str();
}

}  // namespace f2g
