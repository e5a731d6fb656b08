#include "dehn/framed_link.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace dehn {

using nlohmann::ordered_json;

std::string FramedLink::label(std::size_t i) const {
    if (i < labels.size() && !labels[i].empty()) return labels[i];
    std::ostringstream os;
    os << "K" << i;
    return os.str();
}

void FramedLink::validate() const {
    if (linking.rows() != size() || linking.cols() != size())
        throw std::invalid_argument("framed link: linking matrix size mismatch");
    if (!linking.is_symmetric())
        throw std::invalid_argument("framed link: linking matrix must be symmetric");
    if (!labels.empty() && labels.size() != size())
        throw std::invalid_argument("framed link: label count mismatch");
}

FramedLink make_link(const std::vector<Framing>& framings,
                     const std::vector<std::tuple<std::size_t, std::size_t, Int>>& links,
                     const std::vector<std::string>& labels) {
    FramedLink l;
    l.framings = framings;
    l.labels = labels;
    l.linking = IntMatrix(framings.size(), framings.size());
    for (const auto& [i, j, v] : links) l.set_lk(i, j, v);
    l.validate();
    return l;
}

std::string to_json(const FramedLink& link) {
    link.validate();
    ordered_json j;
    j["components"] = ordered_json::array();
    for (std::size_t i = 0; i < link.size(); ++i) {
        ordered_json c;
        c["framing"] = is_infinite(link.framings[i]) ? "inf" : to_string(*link.framings[i]);
        if (!link.labels.empty()) c["label"] = link.labels[i];
        j["components"].push_back(c);
    }
    j["linking"] = ordered_json::array();
    for (std::size_t i = 0; i < link.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < link.size(); ++k)
            row.push_back(i == k ? "0" : to_string(link.lk(i, k)));
        j["linking"].push_back(row);
    }
    return j.dump();
}

FramedLink link_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    FramedLink l;
    for (const auto& c : j.at("components")) {
        std::string f = c.at("framing").get<std::string>();
        if (f == "inf")
            l.framings.push_back(std::nullopt);
        else
            l.framings.push_back(parse_rational(f));
        if (c.contains("label")) l.labels.push_back(c.at("label").get<std::string>());
    }
    if (!l.labels.empty() && l.labels.size() != l.framings.size())
        throw std::invalid_argument("link_from_json: partial labels");
    const std::size_t n = l.framings.size();
    l.linking = IntMatrix(n, n);
    const auto& rows = j.at("linking");
    if (rows.size() != n) throw std::invalid_argument("link_from_json: linking size");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("link_from_json: linking size");
        for (std::size_t k = 0; k < n; ++k)
            if (i != k) l.linking.at(i, k) = Int(rows[i][k].get<std::string>());
    }
    l.validate();
    return l;
}

}  // namespace dehn
