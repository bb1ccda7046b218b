#include "ramify/report.hpp"

#include <iomanip>
#include <sstream>

namespace ramify {

namespace {

std::string pretty(const Value &v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string pass_word(bool pass)
{
    return pass ? "PASS" : "FAIL";
}

Json optional_cut(const std::optional<Cut> &c)
{
    return c ? to_json(*c) : Json(nullptr);
}

Json flags_json(const PrincipalityFlags &f)
{
    return Json{{"best_f_exists", f.best_f_exists},
                {"h_principal", f.h_principal},
                {"j_principal", f.j_principal},
                {"defectless", f.defectless}};
}

std::string flags_text(const PrincipalityFlags &f)
{
    std::ostringstream os;
    os << "best f exists " << f.best_f_exists << ", H principal " << f.h_principal << ", J principal "
       << f.j_principal << ", defectless " << f.defectless;
    return os.str();
}

void row(std::ostringstream &os, const std::string &key, const std::string &value)
{
    os << std::left << std::setw(22) << key << value << '\n';
}

} // namespace

Json to_json(const Value &v)
{
    return v.to_string();
}

Json to_json(const Cut &c)
{
    const Cut n = c.normalized();
    return Json{{"value", to_json(n.value())}, {"bound", to_string(n.bound())}};
}

Json analyze_json(const AnalyzeInput &in, const InvariantReport &r)
{
    Json j;
    j["schema"] = kSchema;
    j["command"] = "analyze";
    j["input"] = Json{{"field", in.field},
                      {"f", in.f},
                      {"precision", in.precision},
                      {"work_precision", in.work_precision},
                      {"samples", in.samples},
                      {"seed", in.seed}};
    Json log = Json::array();
    for (const auto &h : r.best.reduction_log) {
        log.push_back(h.to_string());
    }
    j["best_f"] = Json{{"f", r.best.f_best.to_string()},
                       {"case", to_string(r.best.best_case)},
                       {"swan", to_json(r.best.swan)},
                       {"reduction_log", log}};
    j["classification"] = to_string(r.classification);
    j["ramification"] = Json{{"e", r.e ? Json(*r.e) : Json(nullptr)},
                             {"f", r.f_inertia ? Json(*r.f_inertia) : Json(nullptr)},
                             {"defect", r.defect ? Json(*r.defect) : Json(nullptr)}};
    j["ideals"] = Json{{"H", optional_cut(r.h)},
                       {"J_sigma", optional_cut(r.j_sigma)},
                       {"I_sigma", optional_cut(r.i_sigma)},
                       {"I_sigma_cap_A", optional_cut(r.i_sigma_cap_A)},
                       {"N_J", optional_cut(r.n_of_j)},
                       {"rsw_modulus", optional_cut(r.rsw_modulus)},
                       {"different", optional_cut(r.different)},
                       {"inverse_different", optional_cut(r.inverse_different)}};
    j["lefschetz"] = Json{{"i_sigma", r.lefschetz_i ? to_json(*r.lefschetz_i) : Json(nullptr)},
                          {"j_sigma", r.lefschetz_j ? to_json(*r.lefschetz_j) : Json(nullptr)}};
    if (r.rsw) {
        const LogForm form = r.rsw->reduced();
        j["rsw"] = Json{{"dlog_t", form.coeff_dlog_t.to_string()},
                        {"du", form.coeff_du ? Json(form.coeff_du->to_string()) : Json(nullptr)},
                        {"modulus", to_json(form.modulus)}};
    } else {
        j["rsw"] = nullptr;
    }
    j["principality"] = r.flags ? flags_json(*r.flags) : Json(nullptr);
    Json verdicts = Json::array();
    for (const auto &v : r.verdicts) {
        verdicts.push_back(Json{{"name", v.name}, {"pass", v.pass}, {"checks", v.checks}, {"detail", v.detail}});
    }
    j["verdicts"] = verdicts;
    j["pass"] = r.all_pass();
    return j;
}

std::string analyze_text(const AnalyzeInput &in, const InvariantReport &r)
{
    std::ostringstream os;
    row(os, "field", in.field);
    row(os, "f", r.f.to_string());
    row(os, "best f", r.best.f_best.to_string() + "  (case " + to_string(r.best.best_case) + ", "
                          + std::to_string(r.best.reduction_log.size()) + " reduction steps)");
    row(os, "swan", pretty(r.best.swan));
    row(os, "classification", to_string(r.classification));
    if (r.e) {
        row(os, "e, f, defect",
            std::to_string(*r.e) + ", " + std::to_string(*r.f_inertia) + ", " + std::to_string(*r.defect));
    }
    const std::pair<const char *, const std::optional<Cut> *> cuts[] = {
        {"H", &r.h},
        {"J_sigma", &r.j_sigma},
        {"I_sigma", &r.i_sigma},
        {"I_sigma cap A", &r.i_sigma_cap_A},
        {"N(J_sigma)", &r.n_of_j},
        {"rsw modulus", &r.rsw_modulus},
        {"different", &r.different},
        {"inverse different", &r.inverse_different},
    };
    for (const auto &[name, cut] : cuts) {
        if (*cut) {
            row(os, name, (*cut)->normalized().to_string());
        }
    }
    if (r.lefschetz_i) {
        row(os, "i(sigma), j(sigma)", pretty(*r.lefschetz_i) + ", " + pretty(*r.lefschetz_j));
    }
    if (r.rsw) {
        row(os, "rsw", r.rsw->reduced().to_string());
    }
    if (r.flags) {
        row(os, "principality", flags_text(*r.flags));
    }
    if (r.verdicts.empty()) {
        os << "no invariants: the extension is " << to_string(r.classification) << '\n';
    }
    for (const auto &v : r.verdicts) {
        os << "  " << pass_word(v.pass) << "  " << std::left << std::setw(22) << v.name << v.detail << '\n';
    }
    os << "result: " << pass_word(r.all_pass()) << '\n';
    return os.str();
}

Json tower_json(const TowerAnalysis &t, int trials, std::uint64_t seed)
{
    const TowerReport &r = t.report;
    Json j;
    j["schema"] = kSchema;
    j["command"] = "tower";
    j["input"] = Json{{"p", t.spec.p},         {"n", t.spec.n},   {"q", t.spec.q}, {"a", t.a.to_string()},
                      {"depth", t.spec.depth}, {"trials", trials}, {"seed", seed}};
    j["v0"] = to_json(r.v0);
    j["cuts"] = Json{{"J_sigma", to_json(r.j_cut)},
                     {"H", to_json(r.h_cut)},
                     {"N_J", to_json(r.n_of_j_cut)},
                     {"inverse_different", to_json(r.different_inv_cut)},
                     {"different", to_json(r.different_cut)},
                     {"T", to_json(r.t_cut)},
                     {"T_prime", to_json(r.t_prime_cut)}};
    j["norm_ideal_equality"] = t.norm_ideal_equality;
    j["defect"] = r.defect;
    j["principality"] = flags_json(r.flags);
    j["best_f"] = Json{{"monotone", t.nonexistence.monotone},
                       {"infimum", to_json(t.nonexistence.infimum)},
                       {"infimum_attained", t.nonexistence.infimum_attained},
                       {"infimum_in_gamma", t.nonexistence.infimum_in_gamma}};
    Json levels = Json::array();
    for (const auto &l : t.levels) {
        levels.push_back(Json{{"level", l.index},
                              {"n_i", l.n_i},
                              {"a_i", l.a_i.to_string()},
                              {"v_x", to_json(l.v_x)},
                              {"v_y", to_json(l.v_y)},
                              {"neg_v_f", to_json(l.neg_v_f)}});
    }
    j["levels"] = levels;
    Json steps = Json::array();
    for (std::size_t i = 0; i < t.step.levels.size(); ++i) {
        const auto &v = t.step.levels[i];
        Json witness = Json::object();
        for (const auto &[name, value] : v.witness) {
            witness[name] = value.to_string();
        }
        steps.push_back(Json{{"level", i},
                             {"pass", v.pass},
                             {"trials", v.trials},
                             {"degree_bound", v.degree_bound},
                             {"false_pass_bound", v.false_pass_bound},
                             {"witness", witness}});
    }
    j["step_identity"] = Json{{"pass", t.step.pass()}, {"levels", steps}};
    j["pass"] = t.pass();
    return j;
}

std::string tower_text(const TowerAnalysis &t)
{
    const TowerReport &r = t.report;
    std::ostringstream os;
    row(os, "p, n, q", std::to_string(t.spec.p) + ", " + std::to_string(t.spec.n) + ", " + std::to_string(t.spec.q));
    row(os, "a", t.a.to_string());
    row(os, "v0", pretty(r.v0));
    row(os, "J_sigma = I_sigma", r.j_cut.to_string());
    row(os, "H", r.h_cut.to_string());
    row(os, "N(J_sigma)", r.n_of_j_cut.to_string());
    row(os, "inverse different", r.different_inv_cut.to_string());
    row(os, "different", r.different_cut.to_string());
    row(os, "T, T'", r.t_cut.to_string() + ", " + r.t_prime_cut.to_string());
    row(os, "defect", std::to_string(r.defect));
    row(os, "principality", flags_text(r.flags));
    row(os, "best f", std::string(t.nonexistence.monotone ? "-v(f_i) strictly decreasing" : "not monotone")
                          + ", infimum " + pretty(t.nonexistence.infimum)
                          + (t.nonexistence.infimum_attained ? " attained" : " not attained"));
    os << "level  n_i  a_i  v(x_i)  v(y_i)  -v(f_i)\n";
    for (const auto &l : t.levels) {
        os << "  " << l.index << "  " << l.n_i << "  " << l.a_i.to_string() << "  " << l.v_x << "  " << l.v_y << "  "
           << l.neg_v_f << '\n';
    }
    for (std::size_t i = 0; i < t.step.levels.size(); ++i) {
        const auto &v = t.step.levels[i];
        os << "  " << pass_word(v.pass) << "  step identity, level " << i << ": " << v.trials
           << " trials, degree bound " << v.degree_bound << '\n';
    }
    os << "  " << pass_word(t.norm_ideal_equality) << "  norm_ideal_equality  H = N(J_sigma)\n";
    os << "result: " << pass_word(t.pass()) << '\n';
    return os.str();
}

std::string tower_csv(const std::vector<TowerLevel> &levels)
{
    std::ostringstream os;
    os << "level,n_i,a_i,v_x,v_y,neg_v_f\n";
    for (const auto &l : levels) {
        os << l.index << ',' << l.n_i << ",\"" << l.a_i.to_string() << "\"," << l.v_x.to_string() << ','
           << l.v_y.to_string() << ',' << l.neg_v_f.to_string() << '\n';
    }
    return os.str();
}

Json selftest_json(const std::vector<CriterionResult> &results, std::uint64_t seed)
{
    Json j;
    j["schema"] = kSchema;
    j["command"] = "selftest";
    j["seed"] = seed;
    Json list = Json::array();
    bool all = true;
    for (const auto &c : results) {
        all = all && c.pass;
        list.push_back(
            Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"detail", c.detail}});
    }
    j["criteria"] = list;
    j["pass"] = all;
    return j;
}

std::string selftest_text(const std::vector<CriterionResult> &results)
{
    std::ostringstream os;
    bool all = true;
    for (const auto &c : results) {
        all = all && c.pass;
        os << std::right << std::setw(2) << c.id << "  " << pass_word(c.pass) << "  " << std::left << std::setw(30)
           << c.name << c.detail << '\n';
    }
    os << "result: " << pass_word(all) << '\n';
    return os.str();
}

} // namespace ramify
