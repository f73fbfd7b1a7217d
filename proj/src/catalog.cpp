#include "leibniz/catalog.hpp"

namespace leibniz {

namespace {

std::size_t parse_size(const std::string& text, const std::string& name) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad dimension parameter in catalog name '" + name + "'");
    unsigned long v = std::stoul(text);
    if (v > 64) throw InputError("catalog dimension too large in '" + name + "'");
    return v;
}

std::vector<Scalar> unit(std::size_t n, std::size_t k, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(n, Scalar(0));
    v[k] = c;
    return v;
}

} // namespace

LeibnizAlgebra catalog(const std::string& name, const Field& field) {
    std::string head = name, param;
    if (auto pos = name.find(':'); pos != std::string::npos) {
        head = name.substr(0, pos);
        param = name.substr(pos + 1);
    }

    if (head == "abelian") {
        std::size_t n = parse_size(param, name);
        LeibnizAlgebra L = LeibnizAlgebra::abelian(n, field);
        L.set_name(name);
        return L;
    }
    if (head == "cyclic") {
        std::size_t n = parse_size(param, name);
        if (n < 1) throw InputError("cyclic:n needs n >= 1");
        LeibnizAlgebra L(n, field, name);
        for (std::size_t i = 0; i + 1 < n; ++i) L.set_product(0, i, unit(n, i + 1));
        return L;
    }
    if (!param.empty()) throw InputError("catalog name '" + head + "' takes no parameter");
    if (head == "heisenberg") {
        LeibnizAlgebra L(3, field, name);
        L.set_product(0, 1, unit(3, 2));
        L.set_product(1, 0, unit(3, 2, Scalar(-1)));
        return L;
    }
    if (head == "sl2") {
        // basis (e, h, f): he = 2e, eh = -2e, hf = -2f, fh = 2f, ef = h, fe = -h
        LeibnizAlgebra L(3, field, name);
        L.set_product(1, 0, unit(3, 0, Scalar(2)));
        L.set_product(0, 1, unit(3, 0, Scalar(-2)));
        L.set_product(1, 2, unit(3, 2, Scalar(-2)));
        L.set_product(2, 1, unit(3, 2, Scalar(2)));
        L.set_product(0, 2, unit(3, 1));
        L.set_product(2, 0, unit(3, 1, Scalar(-1)));
        return L;
    }
    if (head == "r2") {
        LeibnizAlgebra L(2, field, name);
        L.set_product(0, 1, unit(2, 1));
        L.set_product(1, 0, unit(2, 1, Scalar(-1)));
        return L;
    }
    throw InputError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 4; ++n) names.push_back("abelian:" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) names.push_back("cyclic:" + std::to_string(n));
    names.push_back("heisenberg");
    names.push_back("sl2");
    names.push_back("r2");
    return names;
}

std::vector<LeibnizAlgebra> catalog_instances(const Field& field) {
    std::vector<LeibnizAlgebra> out;
    for (const auto& name : catalog_names()) out.push_back(catalog(name, field));
    return out;
}

} // namespace leibniz
