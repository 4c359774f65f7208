#include "chowdeg/eval.hpp"

#include "chowdeg/loaded_tree.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace chowdeg {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_us(Clock::time_point from, Clock::time_point to) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::microseconds>(to - from).count());
}

} // namespace

EvalReport evaluate_monomial(const Monomial& m, bool force_forest) {
    EvalReport r;
    auto t0 = Clock::now();
    r.input = m.factor_count() == 0 && !m.labels().is_contiguous()
                  ? "1 (over {" + m.labels().render(m.labels().full_bits()) + "})"
                  : m.render();
    r.n = m.n();
    r.degree = m.degree();

    auto t1 = Clock::now();
    bool improper_degree = r.degree != r.n - 3;
    bool quadratic = !improper_degree && m.first_quadratic_pair().has_value();
    bool clever = !improper_degree && !quadratic && m.is_clever();
    auto t2 = Clock::now();

    r.screen_us = elapsed_us(t1, t2);
    if (improper_degree || quadratic) {
        r.value = 0;
        r.sign = 1;
        r.magnitude = 0;
        r.proper = false;
        r.classification =
            improper_degree ? Classification::ImproperDegree : Classification::ZeroByQuadratic;
        r.total_us = elapsed_us(t0, Clock::now());
        return r;
    }

    if (clever && !force_forest) {
        r.value = 1;
        r.sign = 1;
        r.magnitude = 1;
        r.proper = true;
        r.classification = Classification::Clever;
        r.total_us = elapsed_us(t0, Clock::now());
        return r;
    }

    auto t3 = Clock::now();
    LoadedTree tree = monomial_to_tree(m);
    auto t4 = Clock::now();
    r.tree_us = elapsed_us(t3, t4);

    int s = tree.edge_weight_sum();
    RedundancyForest forest = redundancy_forest(tree);
    Int magnitude = forest_value(forest);
    auto t5 = Clock::now();
    r.forest_us = elapsed_us(t4, t5);

    r.proper = true;
    r.classification = clever ? Classification::Clever : Classification::General;
    r.sign = (s % 2 == 0) ? 1 : -1;
    r.magnitude = magnitude;
    r.value = r.sign * r.magnitude;
    r.total_us = elapsed_us(t0, Clock::now());
    return r;
}

EvalReport evaluate_monomial_text(const std::string& text, bool force_forest) {
    auto t0 = Clock::now();
    Monomial m = Monomial::parse(text);
    auto t1 = Clock::now();
    EvalReport r = evaluate_monomial(m, force_forest);
    r.parse_us = elapsed_us(t0, t1);
    r.total_us += r.parse_us;
    return r;
}

std::string report_to_line(const EvalReport& r) {
    std::ostringstream os;
    os << r.input << "  =>  " << r.value << "  [" << classification_name(r.classification)
       << ", n=" << r.n << ", degree=" << r.degree;
    if (r.oracle)
        os << ", oracle=" << *r.oracle;
    os << "]";
    return os.str();
}

std::string report_to_json(const EvalReport& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["n"] = r.n;
    j["degree"] = r.degree;
    j["value"] = r.value.str();
    j["sign"] = r.sign;
    j["magnitude"] = r.magnitude.str();
    j["proper"] = r.proper;
    j["classification"] = classification_name(r.classification);
    if (r.oracle)
        j["oracle"] = r.oracle->str();
    j["timings_us"] = {{"parse", r.parse_us},
                       {"screen", r.screen_us},
                       {"tree", r.tree_us},
                       {"forest", r.forest_us},
                       {"total", r.total_us}};
    return j.dump();
}

} // namespace chowdeg
