#include "sdquant/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdquant::io {

namespace {

using nlohmann::json;

std::string number_list(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += format_number(xs[i]);
    }
    return out + "]";
}

std::vector<double> doubles_from(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument(std::string(what) + ": expected numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_json(const StepQuantile& q) {
    return "{\"breakpoints\":" + number_list(q.breakpoints()) +
           ",\"values\":" + number_list(q.values()) + "}";
}

std::string to_json(const PiecewiseLinearFn& p) {
    std::string out = "{\"knots\":[";
    for (std::size_t i = 0; i < p.knot_count(); ++i) {
        if (i) out += ",";
        out += "[" + format_number(p.xs()[i]) + "," + format_number(p.ys()[i]) + "]";
    }
    return out + "]}";
}

std::string to_json(const DominanceReport& r) {
    std::string out = std::string("{\"holds\":") + (r.holds ? "true" : "false");
    if (r.witness) out += ",\"witness\":" + format_number(*r.witness);
    out += ",\"margin\":" + format_number(r.margin) + "}";
    return out;
}

std::string to_json(const Market& m) {
    std::string out = "{\"states\":[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += "{\"p\":" + format_number(m.states()[i].p) +
               ",\"rho\":" + format_number(m.states()[i].rho) + "}";
    }
    return out + "]}";
}

std::string to_json(const RandomizedPayoff& payoff) {
    std::string out = "{\"entries\":[";
    for (std::size_t i = 0; i < payoff.entries.size(); ++i) {
        const auto& e = payoff.entries[i];
        if (i) out += ",";
        out += "{\"state\":" + std::to_string(e.state) + ",\"mass\":" + format_number(e.mass) +
               ",\"value\":" + format_number(e.value) + "}";
    }
    return out + "]}";
}

std::string to_json(const EnvelopeSolution& sol) {
    std::string out = "{\"envelope\":" + to_json(sol.envelope) +
                      ",\"quantile\":" + to_json(sol.quantile) + ",\"contact\":[";
    for (std::size_t i = 0; i < sol.contact.size(); ++i) {
        if (i) out += ",";
        out += "[" + format_number(sol.contact[i].lo) + "," + format_number(sol.contact[i].hi) + "]";
    }
    out += "]";
    if (!sol.formula_mismatches.empty())
        out += ",\"formula_mismatches\":" + number_list(sol.formula_mismatches);
    return out + "}";
}

StepQuantile parse_step_quantile(const std::string& text) {
    const json j = json::parse(text);
    return StepQuantile(doubles_from(j.at("breakpoints"), "breakpoints"),
                        doubles_from(j.at("values"), "values"));
}

PiecewiseLinearFn parse_piecewise_linear(const std::string& text) {
    const json j = json::parse(text);
    const auto& knots = j.at("knots");
    if (!knots.is_array()) throw std::invalid_argument("knots: expected an array of pairs");
    std::vector<double> xs, ys;
    for (const auto& k : knots) {
        if (!k.is_array() || k.size() != 2)
            throw std::invalid_argument("knots: expected [x,y] pairs");
        xs.push_back(k[0].get<double>());
        ys.push_back(k[1].get<double>());
    }
    return PiecewiseLinearFn(std::move(xs), std::move(ys));
}

Market parse_market(const std::string& text) {
    const json j = json::parse(text);
    const auto& states = j.at("states");
    if (!states.is_array()) throw std::invalid_argument("states: expected an array");
    std::vector<MarketState> out;
    for (const auto& s : states)
        out.push_back({s.at("p").get<double>(), s.at("rho").get<double>()});
    return Market(std::move(out));
}

RandomizedPayoff parse_randomized_payoff(const std::string& text) {
    const json j = json::parse(text);
    RandomizedPayoff payoff;
    for (const auto& e : j.at("entries"))
        payoff.entries.push_back({e.at("state").get<std::size_t>(), e.at("mass").get<double>(),
                                  e.at("value").get<double>()});
    return payoff;
}

EnvelopeSolution parse_envelope_solution(const std::string& text) {
    const json j = json::parse(text);
    EnvelopeSolution sol;
    sol.envelope = parse_piecewise_linear(j.at("envelope").dump());
    sol.quantile = parse_step_quantile(j.at("quantile").dump());
    for (const auto& c : j.at("contact"))
        sol.contact.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    if (j.contains("formula_mismatches"))
        sol.formula_mismatches = doubles_from(j["formula_mismatches"], "formula_mismatches");
    return sol;
}

StepQuantile quantile_from_csv(std::istream& in) {
    std::vector<double> values, weights;
    std::string line;
    bool any_weight = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t') c = ' ';
        std::istringstream row(line);
        double v;
        if (!(row >> v)) continue; // blank or comment-only line
        values.push_back(v);
        double w;
        if (row >> w) {
            if (!any_weight && values.size() > 1)
                throw std::invalid_argument("samples: weight column must cover every row");
            any_weight = true;
            weights.push_back(w);
        } else if (any_weight) {
            throw std::invalid_argument("samples: weight column must cover every row");
        }
    }
    if (values.empty()) throw std::invalid_argument("samples: no data rows found");
    return StepQuantile::from_samples(values, any_weight ? std::span<const double>(weights)
                                                         : std::span<const double>());
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + file.string());
}

StepQuantile load_step_quantile(const std::filesystem::path& file) {
    return parse_step_quantile(read_file(file));
}

Market load_market(const std::filesystem::path& file) {
    return parse_market(read_file(file));
}

} // namespace sdquant::io
