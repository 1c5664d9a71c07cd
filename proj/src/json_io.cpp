#include "cantor/json_io.hpp"

namespace cantor {

namespace {

json rat_json(const Rat& r) { return rat_str(r); }

json int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

json rat_list(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_json(x));
    return a;
}

} // namespace

json to_json(const Classification& c) {
    json j{{"sparse", c.sparse}, {"regular", c.regular}, {"uniform", c.uniform}};
    if (c.gap) j["gap"] = *c.gap;
    else j["gap"] = nullptr;
    return j;
}

json to_json(const DigitSet& ds) {
    return json{{"base", ds.base()}, {"digits", ds.digits()}};
}

json to_json(const SliceSet& s) {
    json j{{"delta", s.delta}, {"members", s.members}};
    if (!s.empty()) j["min"] = s.min_raw;
    else j["min"] = nullptr;
    return j;
}

json to_json(const PeriodicCode& c) {
    json j{{"base", c.base},
           {"alphabet", alphabet_name(c.alphabet)},
           {"preperiod", c.preperiod},
           {"period", c.period},
           {"text", format_code(c)}};
    if (c.prefix_only) j["prefix_only"] = true;
    if (c.sign < 0) j["sign"] = -1;
    return j;
}

PeriodicCode code_from_json(const json& j) {
    PeriodicCode c;
    c.base = j.at("base").get<int>();
    c.alphabet = alphabet_from_name(j.at("alphabet").get<std::string>());
    c.preperiod = j.at("preperiod").get<std::vector<int>>();
    c.period = j.at("period").get<std::vector<int>>();
    if (j.contains("prefix_only")) c.prefix_only = j["prefix_only"].get<bool>();
    if (j.contains("sign")) c.sign = j["sign"].get<int>();
    return c;
}

json to_json(const SigmaTrace& tr, const DigitSet& ds, const PeriodicCode& code, int depth) {
    json rows = json::array();
    for (int k = 0; k <= depth && k < static_cast<int>(tr.sigma.size()); ++k) {
        json row{{"k", k}, {"sigma", sigma_name(tr.sigma[k])}};
        row["digit"] = k == 0 ? json(nullptr) : json(code.digit_at(k));
        row["mu"] = k <= tr.mu_defined_upto ? json(tr.mu[k].str()) : json(nullptr);
        try {
            row["ell"] = rat_json(ell(ds, code, k));
        } catch (const error&) {
            row["ell"] = nullptr;
        }
        rows.push_back(row);
    }
    json j{{"rows", rows}, {"all_pm_one", tr.all_pm_one}};
    if (tr.eventual_period)
        j["sigma_period"] = json{{"start", tr.eventual_period->start},
                                 {"length", tr.eventual_period->length}};
    else
        j["sigma_period"] = nullptr;
    return j;
}

json to_json(const CaseTable& ct) {
    return json{{"level", ct.level},
                {"total", ct.total.str()},
                {"interval", ct.interval_cases.str()},
                {"potential_interval", ct.potential_cases.str()},
                {"potentially_empty", ct.potentially_empty_cases.str()},
                {"empty", ct.empty_cases.str()},
                {"has_interval", ct.has_interval},
                {"has_potential", ct.has_potential}};
}

json to_json(const IntervalSet& s) {
    json iv = json::array();
    for (const auto& [a, b] : s.intervals) iv.push_back(json::array({rat_json(a), rat_json(b)}));
    return json{{"level", s.level},
                {"scale", rat_json(s.scale)},
                {"intervals", iv},
                {"points", rat_list(s.points)}};
}

json to_json(const IntersectResult& r) {
    json cells = json::array();
    for (const CellCase& c : r.cells) {
        std::string flags;
        if (c.interval) flags += "interval";
        if (c.potential) flags += flags.empty() ? "potential_interval" : "+potential_interval";
        if (c.potentially_empty) flags += flags.empty() ? "potentially_empty" : "+potentially_empty";
        cells.push_back(json{{"h", c.h.str()}, {"case", flags}});
    }
    return json{{"cases", to_json(r.cases)}, {"cells", cells}, {"tight", to_json(r.tight)}};
}

json to_json(const BoxCurve& c) {
    json pts = json::array();
    for (const BoxPoint& p : c.points)
        pts.push_back(json{{"level", p.level},
                           {"count", p.count.str()},
                           {"length", rat_json(p.length)},
                           {"slope", p.slope}});
    return json{{"points", pts}, {"regression_slope", c.regression_slope}};
}

json to_json(const DimensionValue& d) {
    return json{{"exact", d.exact()},
                {"count", d.count.str()},
                {"log_base", d.logbase.str()},
                {"float", d.value()}};
}

json to_json(const MeasureValue& m) {
    if (!m.defined) return json{{"exact", nullptr}, {"float", nullptr}, {"reason", m.reason}};
    return json{{"exact", m.exact()},
                {"factor", rat_json(m.factor)},
                {"power_arg", rat_json(m.base_arg)},
                {"s", to_json(m.s)},
                {"float", m.value()}};
}

json to_json(const EquivalenceResult& r) {
    json j{{"decided", r.decided}, {"equal", r.equal}};
    j["witness_k"] = r.witness_k ? json(*r.witness_k) : json(nullptr);
    return j;
}

json to_json(const RationalEquivalenceResult& r) {
    json j;
    j["verdict"] = r.verdict == rational_verdict::yes ? "YES" : "UNDECIDED_PREFIX";
    j["k"] = r.k;
    j["q"] = r.q;
    j["gamma"] = r.gamma ? to_json(*r.gamma) : json(nullptr);
    json viol = json::object();
    for (const auto& [q, jx] : r.violations) viol[std::to_string(q)] = jx;
    j["violations"] = viol;
    j["candidate"] = r.candidate
                         ? json{{"k", r.candidate->first}, {"q", r.candidate->second}}
                         : json(nullptr);
    return j;
}

json to_json(const SelfSimilarReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["base"] = r.base;
    j["alpha"] = to_json(r.alpha);
    j["shift"] = rat_json(r.shift);
    if (r.verdict == selfsim_verdict::undecided_prefix) return j;
    j["k"] = r.k;
    j["q"] = r.q;
    j["e_base"] = r.e_base.str();
    j["e"] = int_list(r.e);
    if (r.e2p_base) {
        j["e_2p_base"] = r.e2p_base->str();
        j["e_2p"] = int_list(r.e2p);
    }
    j["mu_k"] = r.mu_k.str();
    j["offsets"] = rat_list(r.offsets);
    j["dimension"] = to_json(r.dim);
    j["measure"] = to_json(r.measure);
    if (r.verdict == selfsim_verdict::finite) {
        j["points"] = rat_list(r.points);
        j["boundary_points"] = rat_list(r.boundary_points);
        j["gamma"] = r.gamma ? to_json(*r.gamma) : json(nullptr);
    }
    if (r.sp) {
        j["strongly_periodic"] = r.sp->strongly_periodic;
        if (r.sp->strongly_periodic) {
            j["sp_q"] = r.sp->q;
            j["sp_p"] = r.sp->p;
            j["sp_witnesses"] = r.sp->witnesses;
        }
    }
    if (!r.maps.empty()) {
        json maps = json::array();
        for (const SimilarityMap& m : r.maps)
            maps.push_back(json{{"ratio", rat_json(m.ratio)}, {"offset", rat_json(m.offset)}});
        j["similarity_maps"] = maps;
        j["hull_disjoint"] = r.hull_disjoint;
    }
    return j;
}

json to_json(const GeneratorResult& r) {
    return json{{"gamma_prefix", to_json(r.gamma_prefix)},
                {"index_i", r.index_i},
                {"kept", r.kept}};
}

json to_json(const UniformHatResult& r) {
    json j{{"hat", to_json(r.hat)}, {"aligned", r.aligned}};
    if (r.aligned) {
        j["p"] = r.p;
        j["u"] = r.u;
        j["v"] = r.v;
    }
    return j;
}

json to_json(const TransportReport& r) {
    json samples = json::array();
    for (const TransportSample& s : r.samples)
        samples.push_back(json{{"x", rat_str(s.x)},
                               {"y", rat_str(s.y)},
                               {"gx", rat_str(s.gx)},
                               {"gy", rat_str(s.gy)}});
    return json{{"preserved", r.preserved},
                {"identity_at_inv_n", r.identity_at_inv_n},
                {"scale", rat_str(r.scale)},
                {"samples", samples}};
}

json to_json(const PsiResult& r) {
    return json{{"y", to_json(r.y)}, {"offset", rat_str(r.offset)}};
}

} // namespace cantor
